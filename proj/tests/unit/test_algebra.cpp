#include <gtest/gtest.h>

#include <cmath>

#include "lgt/algebra.hpp"
#include "lgt/error.hpp"

namespace lgt {
namespace {

constexpr AlgebraKind C = AlgebraKind::complex;
constexpr AlgebraKind H = AlgebraKind::quaternion;
constexpr AlgebraKind O = AlgebraKind::octonion;

// Frozen by tests/oracles/octonion_table.py: e_p e_q = sign(v) e_{|v|}.
constexpr int octonion_table[8][8] = {
#include "octonion_table.inc"
};

AlgebraElement signed_basis(AlgebraKind kind, int v) {
    const auto e = AlgebraElement::basis(kind, std::abs(v) - 1);
    return v < 0 ? -e : e;
}

TEST(Algebra, QuaternionRelations) {
    const auto i = AlgebraElement::basis(H, 1);
    const auto j = AlgebraElement::basis(H, 2);
    const auto k = AlgebraElement::basis(H, 3);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(i * i, -AlgebraElement::one(H));
    EXPECT_EQ((i * j) * k, -AlgebraElement::one(H));
}

TEST(Algebra, OctonionTableMatchesCayleyDicksonFixture) {
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            EXPECT_EQ(AlgebraElement::basis(O, p) * AlgebraElement::basis(O, q),
                      signed_basis(O, octonion_table[p][q]))
                << "e" << p + 1 << " e" << q + 1;
        }
    }
}

TEST(Algebra, OctonionRestrictsToQuaternions) {
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            const auto qh = AlgebraElement::basis(H, p) * AlgebraElement::basis(H, q);
            const auto qo = AlgebraElement::basis(O, p) * AlgebraElement::basis(O, q);
            for (int c = 0; c < 4; ++c) EXPECT_EQ(qh[c], qo[c]);
            for (int c = 4; c < 8; ++c) EXPECT_EQ(qo[c], 0.0);
        }
    }
}

TEST(Algebra, BasisProductsAreSignedUnits) {
    for (AlgebraKind kind : {C, H, O}) {
        const int d = dimension(kind);
        for (int p = 0; p < d; ++p) {
            for (int q = 0; q < d; ++q) {
                EXPECT_TRUE(as_signed_basis(AlgebraElement::basis(kind, p) *
                                            AlgebraElement::basis(kind, q))
                                .has_value());
            }
        }
    }
}

TEST(Algebra, IdentityElement) {
    Rng rng = substream(1, 0);
    for (AlgebraKind kind : {C, H, O}) {
        for (int t = 0; t < 100; ++t) {
            const auto x = haar_sample(kind, rng);
            EXPECT_EQ(AlgebraElement::one(kind) * x, x);
            EXPECT_EQ(x * AlgebraElement::one(kind), x);
        }
    }
}

TEST(Algebra, ConjReNorm) {
    const auto i = AlgebraElement::basis(H, 1);
    EXPECT_EQ(conj(i), -i);
    EXPECT_EQ(re(AlgebraElement::basis(H, 3)), 0.0);
    const double coords[] = {3.0, 4.0};
    EXPECT_DOUBLE_EQ(norm(AlgebraElement(C, coords)), 5.0);
}

TEST(Algebra, KindMismatchIsInvalidArgument) {
    try {
        (void)(AlgebraElement::one(C) * AlgebraElement::one(H));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
}

TEST(Algebra, NormIsMultiplicative) {
    Rng rng = substream(2, 0);
    for (AlgebraKind kind : {C, H, O}) {
        for (int t = 0; t < 10'000; ++t) {
            const auto x = haar_sample(kind, rng);
            const auto y = haar_sample(kind, rng);
            EXPECT_NEAR(norm(x * y), 1.0, identity_tolerance);
        }
    }
}

TEST(Algebra, RealPartIsAssociative) {
    Rng rng = substream(3, 0);
    for (int t = 0; t < 10'000; ++t) {
        const auto a = haar_sample(O, rng);
        const auto b = haar_sample(O, rng);
        const auto c = haar_sample(O, rng);
        EXPECT_LE(re_assoc_defect(a, b, c), identity_tolerance);
    }
    for (AlgebraKind kind : {C, H}) {
        for (int t = 0; t < 1000; ++t) {
            const auto a = haar_sample(kind, rng);
            const auto b = haar_sample(kind, rng);
            const auto c = haar_sample(kind, rng);
            EXPECT_LE(re_assoc_defect(a, b, c), 1e-15);
        }
    }
    const auto i = AlgebraElement::basis(H, 1);
    const auto j = AlgebraElement::basis(H, 2);
    const auto k = AlgebraElement::basis(H, 3);
    EXPECT_EQ(re_assoc_defect(i, j, k), 0.0);
}

TEST(Algebra, TimesConjugateIsNormSquared) {
    Rng rng = substream(4, 0);
    for (int t = 0; t < 1000; ++t) {
        AlgebraElement x = haar_sample(O, rng);
        x = 2.5 * x;
        EXPECT_NEAR(re(x * conj(x)), x.norm_squared(), identity_tolerance);
    }
}

TEST(Algebra, AssociatorSign) {
    const auto e = [](int k) { return AlgebraElement::basis(O, k); };
    EXPECT_EQ(associator_sign(e(1), e(2), e(3)), 1);
    EXPECT_EQ(associator_sign(e(0), e(5), e(6)), 1);
    int defective = 0;
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            for (int c = 0; c < 8; ++c) {
                if (associator_sign(e(a), e(b), e(c)) == -1) ++defective;
            }
        }
    }
    EXPECT_GT(defective, 0);
    Rng rng = substream(5, 0);
    EXPECT_THROW((void)associator_sign(haar_sample(O, rng), e(1), e(2)), Error);
}

TEST(Algebra, HaarSamplesAreUnit) {
    Rng rng = substream(6, 0);
    for (AlgebraKind kind : {C, H, O}) {
        for (int t = 0; t < 10'000; ++t) EXPECT_NEAR(norm(haar_sample(kind, rng)), 1.0, unit_tolerance);
    }
    SphereSampler sphere;
    for (int t = 0; t < 1000; ++t) {
        const auto x = sphere.imaginary_unit(rng);
        EXPECT_EQ(x.re(), 0.0);
        EXPECT_NEAR(norm(x), 1.0, unit_tolerance);
    }
}

TEST(Algebra, HaarMoments) {
    Rng rng = substream(7, 0);
    constexpr int n = 1'000'000;
    double sum[4] = {};
    double sq[4] = {};
    double re2 = 0.0;
    double re4 = 0.0;
    for (int t = 0; t < n; ++t) {
        const auto x = haar_sample(H, rng);
        for (int c = 0; c < 4; ++c) {
            sum[c] += x[c];
            sq[c] += x[c] * x[c];
        }
        re2 += x.re() * x.re();
        re4 += std::pow(x.re(), 4);
    }
    for (int c = 0; c < 4; ++c) {
        const double mean = sum[c] / n;
        const double se = std::sqrt((sq[c] / n - mean * mean) / n);
        EXPECT_LE(std::abs(mean), 4 * se) << "coordinate " << c;
    }
    const double m2 = re2 / n;
    const double se2 = std::sqrt((re4 / n - m2 * m2) / n);
    EXPECT_LE(std::abs(m2 - 0.25), 4 * se2);
}

TEST(Algebra, UnitSet) {
    const UnitSet s(H);
    EXPECT_EQ(s.size(), 4);
    EXPECT_EQ(s.element(0), AlgebraElement::one(H));
    EXPECT_EQ(s.index_of(AlgebraElement::basis(H, 2)), 2);
    EXPECT_FALSE(s.index_of(-AlgebraElement::basis(H, 2)).has_value());
    EXPECT_EQ(parse_algebra_kind("quaternion"), H);
}

}  // namespace
}  // namespace lgt
