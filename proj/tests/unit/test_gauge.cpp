#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "lgt/error.hpp"
#include "lgt/gauge.hpp"
#include "lgt/quadrature.hpp"

namespace lgt {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Hexagon {
    TriangulatedPolygon polygon = build_hexagon_example();
    HexagonLabels labels = hexagon_labels(polygon);
    SqrtSigma sigma = hexagon_example_sigma(polygon);

    // Angles by interior slot from spoke angles t1..t6.
    std::vector<double> slots(const std::array<double, 6>& t) const {
        std::vector<double> theta(6);
        for (std::size_t n = 0; n < 6; ++n) {
            theta[static_cast<std::size_t>(polygon.interior_edge_slot(labels.spokes[n]))] = t[n];
        }
        return theta;
    }
    GaugeField field(const std::array<double, 6>& t) const {
        return GaugeField::from_angles(polygon, sigma, slots(t));
    }
    int face_between(std::size_t n) const {
        for (std::size_t f = 0; f < polygon.faces().size(); ++f) {
            const auto& v = polygon.faces()[f].vertices;
            const auto has = [&](int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
            if (has(labels.corners[n]) && has(labels.corners[(n + 1) % 6])) return static_cast<int>(f);
        }
        return -1;
    }
};

std::array<double, 6> random_spokes(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::array<double, 6> t{};
    for (double& x : t) x = angle(rng);
    return t;
}

TEST(Gauge, SigmaInducedBoundary) {
    const Hexagon h;
    const GaugeField U(h.polygon, h.sigma);
    // u(AB) = 1 for equal spins, i sigma(B) otherwise.
    for (int e : h.polygon.boundary_edges()) {
        const Edge& edge = h.polygon.edges()[static_cast<std::size_t>(e)];
        const int a = h.sigma.sigma[static_cast<std::size_t>(edge.from)];
        const int b = h.sigma.sigma[static_cast<std::size_t>(edge.to)];
        EXPECT_EQ(U[e][0], a == b ? 1.0 : 0.0);
        EXPECT_EQ(U[e][1], a == b ? 0.0 : static_cast<double>(b));
    }
    const GaugeField V(h.polygon, sqrt_of(h.sigma));
    for (int e : h.polygon.boundary_edges()) EXPECT_EQ(U[e], V[e]);
}

TEST(Gauge, HexagonFaceHolonomies) {
    const Hexagon h;
    Rng rng = substream(11, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_spokes(rng);
        const GaugeField U = h.field(t);
        const double expected[6] = {std::sin(t[0] + t[1]),  std::sin(t[1] + t[2]),
                                    std::cos(t[2] + t[3]),  -std::sin(t[3] + t[4]),
                                    -std::sin(t[4] + t[5]), std::cos(t[5] + t[0])};
        for (std::size_t n = 0; n < 6; ++n) {
            EXPECT_NEAR(face_holonomy_re(h.polygon, U, h.face_between(n)), expected[n], 1e-12);
        }
    }
}

TEST(Gauge, TrivialFieldWeights) {
    const auto p = build_hexagon_example();
    const SqrtSigma plus{std::vector<int>(p.vertices().size(), 1)};
    const GaugeField U(p, plus);
    for (std::size_t f = 0; f < 6; ++f) EXPECT_EQ(face_holonomy_re(p, U, static_cast<int>(f)), 1.0);
    EXPECT_NEAR(weight_exp(p, U, 0.4), std::exp(6 * 0.4), 1e-12);
    EXPECT_EQ(weight_exp(p, U, 0.0), 1.0);
    EXPECT_EQ(weight_prelinearized(p, U, 0.0), 1.0);
    EXPECT_NEAR(std::log(weight_exp(p, U, 0.3)), 0.3 * plaquette_action(p, U), 1e-12);
}

TEST(Gauge, SU2FaceClosingToOne) {
    const auto p = build_hexagon_example();
    Rng rng = substream(12, 0);
    HiggsH h = hexagon_example_h(p);
    h.kind = AlgebraKind::quaternion;
    GaugeField U(p, h);
    const Face& f = p.faces()[0];
    for (int trial = 0; trial < 100; ++trial) {
        // Face 0 has one boundary edge; draw the next edge and close the face with the last.
        int fixed = 0;
        while (p.interior_edge_slot(f.edges[static_cast<std::size_t>(fixed)]) >= 0) ++fixed;
        const int free_edge = f.edges[static_cast<std::size_t>((fixed + 1) % 3)];
        const int solved = f.edges[static_cast<std::size_t>((fixed + 2) % 3)];
        U.set_interior(p, p.interior_edge_slot(free_edge), haar_sample(AlgebraKind::quaternion, rng));
        const AlgebraElement prod = U[f.edges[static_cast<std::size_t>(fixed)]] * U[free_edge];
        U.set_interior(p, p.interior_edge_slot(solved), conj(prod));
        EXPECT_NEAR(face_holonomy_re(p, U, 0), 1.0, 1e-12);
    }
}

TEST(Gauge, PrelinearizedMatchesExampleFactors) {
    const Hexagon h;
    const double beta = 0.37;
    Rng rng = substream(13, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_spokes(rng);
        const double expected = (1 + beta * std::sin(t[0] + t[1])) * (1 + beta * std::sin(t[1] + t[2])) *
                                (1 + beta * std::cos(t[2] + t[3])) * (1 - beta * std::sin(t[3] + t[4])) *
                                (1 - beta * std::sin(t[4] + t[5])) * (1 + beta * std::cos(t[5] + t[0]));
        EXPECT_NEAR(weight_prelinearized(h.polygon, h.field(t), beta), expected, 1e-12);
    }
    // U = 1 on the spokes.
    const auto U = h.field({});
    EXPECT_NEAR(weight_prelinearized(h.polygon, U, beta),
                (1 + beta * 0) * (1 + beta * 0) * (1 + beta) * (1 - beta * 0) * (1 - beta * 0) * (1 + beta),
                1e-12);
}

TEST(Gauge, PrelinearizedFirstOrder) {
    const Hexagon h;
    Rng rng = substream(14, 0);
    const double beta = 1e-6;
    for (int trial = 0; trial < 20; ++trial) {
        const auto U = h.field(random_spokes(rng));
        const double slope = (weight_prelinearized(h.polygon, U, beta) - 1.0) / beta;
        EXPECT_NEAR(slope, plaquette_action(h.polygon, U), 1e-5);
        EXPECT_NEAR(weight_prelinearized(h.polygon, U, beta) - 1.0, beta * plaquette_action(h.polygon, U), 1e-9);
    }
}

TEST(Gauge, SpinWeights) {
    const auto p = build_hexagon_example();
    const SqrtSigma plus{std::vector<int>(p.vertices().size(), 1)};
    const GaugeField U(p, plus);
    SpinAssignment s{plus.sigma};
    EXPECT_EQ(weight_spin(p, U, s), 1.0);
    s.spin[static_cast<std::size_t>(p.interior_vertices()[0])] = -1;
    EXPECT_EQ(weight_spin(p, U, s), 0.0);

    const Hexagon h;
    Rng rng = substream(15, 0);
    const auto t = random_spokes(rng);
    SpinAssignment up{h.sigma.sigma};
    const auto c2 = [&](int n) { return std::pow(std::cos(t[static_cast<std::size_t>(n)]), 2); };
    const auto s2 = [&](int n) { return std::pow(std::sin(t[static_cast<std::size_t>(n)]), 2); };
    const double plus_term = c2(0) * s2(1) * c2(2) * c2(3) * s2(4) * c2(5);
    const double minus_term = s2(0) * c2(1) * s2(2) * s2(3) * c2(4) * s2(5);
    EXPECT_NEAR(weight_spin(h.polygon, h.field(t), up), plus_term, 1e-14);

    const double beta = 0.8;
    EXPECT_NEAR(weight_linearized_u1(h.polygon, h.field(t), h.sigma, beta),
                1 + std::pow(beta, 6) * (plus_term + minus_term), 1e-12);
    EXPECT_EQ(weight_linearized_u1(h.polygon, h.field(t), h.sigma, 0.0), 1.0);
    EXPECT_EQ(weight_linearized_u1(h.polygon, h.field({}), h.sigma, inf), 0.0);
    std::array<double, 6> only_plus{};
    only_plus[1] = std::numbers::pi / 2;
    only_plus[4] = std::numbers::pi / 2;
    EXPECT_NEAR(weight_linearized_u1(h.polygon, h.field(only_plus), h.sigma, inf), 1.0, 1e-15);

    HiggsH q = sqrt_of(h.sigma);
    q.kind = AlgebraKind::quaternion;
    const GaugeField Q(h.polygon, q);
    EXPECT_THROW(weight_spin(h.polygon, Q, up), Error);
}

TEST(Gauge, UnitHiggsMatchesSpinWeight) {
    const Hexagon h;
    const HiggsH sq = sqrt_of(h.sigma);
    Rng rng = substream(16, 0);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const GaugeField U = h.field(random_spokes(rng));
        PottsAssignment H{sq.h};
        SpinAssignment S{h.sigma.sigma};
        const int o = h.labels.center;
        H.unit[static_cast<std::size_t>(o)] = coin(rng) ? 1 : 0;
        S.spin[static_cast<std::size_t>(o)] = H[o] == 0 ? 1 : -1;
        EXPECT_NEAR(weight_linearized_higgs(h.polygon, U, higgs_from_potts(sq, H), 0.3, inf),
                    weight_spin(h.polygon, U, S), 1e-12);
    }
    const auto p = build_hexagon_example();
    const HiggsH ones{AlgebraKind::complex, std::vector<int>(p.vertices().size(), 0)};
    const GaugeField U(p, ones);
    const HiggsField H = higgs_from_potts(ones, PottsAssignment{ones.h});
    EXPECT_EQ(weight_linearized_higgs(p, U, H, 0.5, inf), 1.0);
    const GaugeField V = h.field(random_spokes(rng));
    EXPECT_EQ(weight_linearized_higgs(h.polygon, V, higgs_from_potts(sq, PottsAssignment{sq.h}), 0.0, 0.0), 1.0);
}

TEST(Gauge, GaugeInvariance) {
    for (AlgebraKind kind : {AlgebraKind::complex, AlgebraKind::quaternion}) {
        for (const char* name : {"hexagon", "double-hexagon"}) {
            const auto p = *builtin_polygon(name);
            HiggsH h = sqrt_of(hexagon_example_sigma(p));
            h.kind = kind;
            Rng rng = substream(17, static_cast<std::uint64_t>(kind));
            GaugeField U(p, h);
            for (int trial = 0; trial < 1000; ++trial) {
                for (std::size_t s = 0; s < p.interior_edges().size(); ++s) {
                    U.set_interior(p, static_cast<int>(s), haar_sample(kind, rng));
                }
                std::vector<AlgebraElement> g(p.interior_vertices().size()), Hint(g.size());
                for (auto& x : g) x = haar_sample(kind, rng);
                for (auto& x : Hint) x = haar_sample(kind, rng);
                const HiggsField H = higgs_from_interior(p, h, Hint);
                const auto [U2, H2] = gauge_transform_higgs(p, U, H, g);
                EXPECT_NEAR(weight_exp(p, U2, 0.7), weight_exp(p, U, 0.7), 1e-10);
                EXPECT_NEAR(weight_higgs(p, U2, H2, 0.7, 0.4), weight_higgs(p, U, H, 0.7, 0.4), 1e-10);
                for (std::size_t f = 0; f < p.faces().size(); ++f) {
                    EXPECT_NEAR(face_holonomy_re(p, U2, static_cast<int>(f)),
                                face_holonomy_re(p, U, static_cast<int>(f)), 1e-12);
                }
                for (int e : p.boundary_edges()) EXPECT_EQ(U2[e], U[e]);
            }
            const std::vector<AlgebraElement> ones(p.interior_vertices().size(), AlgebraElement::one(kind));
            const GaugeField same = gauge_transform(p, U, ones);
            for (std::size_t e = 0; e < U.size(); ++e) EXPECT_EQ(same[static_cast<int>(e)], U[static_cast<int>(e)]);
        }
    }
}

TEST(Gauge, OctonionGaugeTransformUnsupported) {
    const auto p = build_hexagon_example();
    HiggsH h = hexagon_example_h(p);
    h.kind = AlgebraKind::octonion;
    const GaugeField U(p, h);
    const std::vector<AlgebraElement> g(1, AlgebraElement::one(AlgebraKind::octonion));
    try {
        gauge_transform(p, U, g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported_operation);
    }
}

TEST(Gauge, LinearizedWeightsAreReflectionInvariant) {
    const auto p = build_double_hexagon();
    const SqrtSigma sigma = hexagon_example_sigma(p);
    Rng rng = substream(18, 0);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> theta(p.interior_edges().size());
        for (double& t : theta) t = angle(rng);
        const double base = weight_linearized_u1(p, GaugeField::from_angles(p, sigma, theta), sigma, 0.6);
        EXPECT_GE(base, 0.0);
        const std::size_t s = static_cast<std::size_t>(trial) % theta.size();
        for (double r : {std::numbers::pi - theta[s], std::numbers::pi + theta[s]}) {
            auto t2 = theta;
            t2[s] = r;
            EXPECT_NEAR(weight_linearized_u1(p, GaugeField::from_angles(p, sigma, t2), sigma, 0.6), base, 1e-12);
        }
    }
    // SU(2): negating one coordinate of one link.
    HiggsH h = hexagon_example_h(build_hexagon_example());
    h.kind = AlgebraKind::quaternion;
    const auto hex = build_hexagon_example();
    GaugeField U(hex, h);
    for (int trial = 0; trial < 1000; ++trial) {
        for (std::size_t s = 0; s < 6; ++s) U.set_interior(hex, static_cast<int>(s), haar_sample(AlgebraKind::quaternion, rng));
        const double base = weight_linearized(hex, U, h, 0.6);
        const auto s = static_cast<std::size_t>(trial % 6);
        AlgebraElement x = U[hex.interior_edges()[s]];
        x[trial % 4] = -x[trial % 4];
        GaugeField V = U;
        V.set_interior(hex, static_cast<int>(s), x);
        EXPECT_NEAR(weight_linearized(hex, V, h, 0.6), base, 1e-12);
    }
}

TEST(Gauge, U1ModelMatchesGenericWeights) {
    for (const char* name : {"hexagon", "double-hexagon"}) {
        const auto p = *builtin_polygon(name);
        const SqrtSigma sigma = hexagon_example_sigma(p);
        const U1Model model(p, sigma);
        Rng rng = substream(19, 0);
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> theta(model.n_edges());
            for (double& t : theta) t = angle(rng);
            const U1Angles a(theta);
            const GaugeField U = model.field(a.point());
            for (double beta : {0.0, 0.45, 1.0}) {
                EXPECT_NEAR(model.weight_exp(a.point(), beta), weight_exp(p, U, beta), 1e-10);
                EXPECT_NEAR(model.weight_prelinearized(a.point(), beta), weight_prelinearized(p, U, beta), 1e-12);
                EXPECT_NEAR(model.weight_linearized(a.point(), beta), weight_linearized_u1(p, U, sigma, beta), 1e-12);
            }
            for (std::size_t k = 0; k < model.n_spin_states(); ++k) {
                EXPECT_NEAR(model.weight_spin(a.point(), k), weight_spin(p, U, model.spin_state(k)), 1e-14);
            }
        }
    }
}

}  // namespace
}  // namespace lgt
