#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lgt/error.hpp"
#include "lgt/quadrature.hpp"
#include "lgt/spinmodels.hpp"

namespace lgt {
namespace {

const double two_pi = 2.0 * std::numbers::pi;
const double pi6 = std::pow(std::numbers::pi, 6);

TEST(Quadrature, ConstantIntegrand) {
    QuadratureOptions o;
    const Estimate e = integrate_u1([](const U1Point&) { return 1.0; }, 6, o);
    EXPECT_NEAR(e.value, std::pow(two_pi, 6), 1e-9);
    EXPECT_EQ(e.std_error, 0.0);
    EXPECT_EQ(e.n, 15625u);
    EXPECT_EQ(e.method, Method::quadrature);

    o.measure = Measure::haar;
    EXPECT_NEAR(integrate_u1([](const U1Point&) { return 1.0; }, 6, o).value, 1.0, 1e-15);
}

TEST(Quadrature, ExactForLowDegree) {
    QuadratureOptions o;
    o.measure = Measure::haar;
    // <cos^4> = 3/8, <cos^2 sin^2> = 1/8, <cos> = 0.
    const auto r = integrate_u1_multi(
        [](const U1Point& p, std::span<double> out) {
            out[0] = std::pow(p.cos[0], 4);
            out[1] = p.cos[0] * p.cos[0] * p.sin[1] * p.sin[1];
            out[2] = p.cos[0];
            out[3] = std::cos(p.theta[0] + 2 * p.theta[1]);
        },
        4, 2, o);
    EXPECT_NEAR(r[0].value, 3.0 / 8.0, 1e-15);
    EXPECT_NEAR(r[1].value, 1.0 / 4.0, 1e-15);
    EXPECT_NEAR(r[2].value, 0.0, 1e-15);
    EXPECT_NEAR(r[3].value, 0.0, 1e-15);
}

TEST(Quadrature, HexagonPartitionFunctionClosedForm) {
    const auto p = build_hexagon_example();
    const U1Model model(p, hexagon_example_sigma(p));
    for (double beta : {0.0, 0.3, 0.7, 1.0, -0.4, 2.5}) {
        const Estimate z = integrate_u1([&](const U1Point& x) { return model.weight_prelinearized(x, beta); },
                                        6, QuadratureOptions{});
        EXPECT_NEAR(z.value, 64 * pi6 + 2 * pi6 * std::pow(beta, 6), 1e-9 * std::max(1.0, std::pow(beta, 6)));
        const Estimate z2 = integrate_u1([&](const U1Point& x) { return model.weight_linearized(x, beta); },
                                         6, QuadratureOptions{});
        EXPECT_NEAR(z2.value, z.value, 1e-9 * std::max(1.0, std::pow(beta, 6)));
    }
}

TEST(Quadrature, GridFiveAndNineAgreeOnBuiltInWeights) {
    const auto p = build_hexagon_example();
    const U1Model model(p, hexagon_example_sigma(p));
    QuadratureOptions five, nine;
    nine.grid = 9;
    for (double beta : {0.3, 1.0}) {
        const auto f = [&](const U1Point& x, std::span<double> out) {
            out[0] = model.weight_prelinearized(x, beta);
            out[1] = model.weight_linearized(x, beta);
            out[2] = model.spin_sum(x);
            out[3] = model.weight_spin(x, 0);
        };
        const auto a = integrate_u1_multi(f, 4, 6, five);
        const auto b = integrate_u1_multi(f, 4, 6, nine);
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[k].value, b[k].value, 1e-10 * std::abs(a[k].value) + 1e-10);
    }
}

TEST(Quadrature, SpinMarginalIsUniform) {
    const auto p = build_hexagon_example();
    const U1Model model(p, hexagon_example_sigma(p));
    ASSERT_EQ(model.n_spin_states(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        const Estimate e = integrate_u1([&](const U1Point& x) { return model.weight_spin(x, k); }, 6, {});
        EXPECT_NEAR(e.value, pi6, 1e-9);
    }
    EXPECT_NEAR(z_infinity(model, {}).value, 2 * pi6, 1e-9);
}

TEST(Quadrature, WorkerCountDoesNotChangeResult) {
    const auto p = build_double_hexagon();
    const U1Model model(p, hexagon_example_sigma(p));
    QuadratureOptions o;
    o.grid = 3;
    const auto f = [&](const U1Point& x) { return model.weight_exp(x, 0.9); };
    const double one = integrate_u1(f, model.n_edges(), o).value;
    o.workers = 8;
    EXPECT_EQ(integrate_u1(f, model.n_edges(), o).value, one);
}

TEST(Quadrature, ResourceLimit) {
    QuadratureOptions o;
    try {
        integrate_u1([](const U1Point&) { return 1.0; }, 30, o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
    o.grid = 0;
    EXPECT_THROW(integrate_u1([](const U1Point&) { return 1.0; }, 2, o), Error);
}

TEST(Quadrature, LinearizedDensityIsNonNegative) {
    const auto p = build_double_hexagon();
    const U1Model model(p, hexagon_example_sigma(p));
    Rng rng = substream(21, 0);
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    for (int t = 0; t < 10'000; ++t) {
        std::vector<double> theta(model.n_edges());
        for (double& x : theta) x = angle(rng);
        const U1Angles a(theta);
        EXPECT_GE(model.weight_linearized(a.point(), 0.8), 0.0);
        EXPECT_GE(model.weight_prelinearized(a.point(), 0.8), 0.0);
    }
}

}  // namespace
}  // namespace lgt
