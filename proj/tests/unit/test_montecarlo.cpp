#include <gtest/gtest.h>

#include <cmath>

#include "lgt/error.hpp"
#include "lgt/montecarlo.hpp"

namespace lgt {
namespace {

struct Fixture {
    TriangulatedPolygon polygon = build_hexagon_example();
    HiggsH h = [this] {
        HiggsH x = hexagon_example_h(polygon);
        x.kind = AlgebraKind::quaternion;
        return x;
    }();
};

TEST(MonteCarlo, ConstantObservable) {
    Fixture fx;
    MonteCarloOptions o;
    o.samples = 50'000;
    const auto r = mc_expectation(
        fx.polygon, fx.h, [&](const GaugeField& U) { return weight_prelinearized(fx.polygon, U, 0.5); },
        [](const GaugeField&) { return 1.0; }, o);
    EXPECT_EQ(r.expectation.value, 1.0);
    EXPECT_EQ(r.expectation.std_error, 0.0);
    EXPECT_EQ(r.expectation.method, Method::monte_carlo);
    EXPECT_EQ(r.normalization.n, o.samples);
}

TEST(MonteCarlo, QuaternionRealPartSquared) {
    Fixture fx;
    MonteCarloOptions o;
    o.samples = 1'000'000;
    o.seed = 3;
    const int e = fx.polygon.interior_edges()[0];
    const auto r = mc_expectation(
        fx.polygon, fx.h, [](const GaugeField&) { return 1.0; },
        [&](const GaugeField& U) { return U[e].re() * U[e].re(); }, o);
    EXPECT_LE(std::abs(r.expectation.value - 0.25), 4 * r.expectation.std_error);
    EXPECT_GT(r.expectation.std_error, 0.0);
}

TEST(MonteCarlo, DeterministicAcrossWorkers) {
    Fixture fx;
    MonteCarloOptions o;
    o.samples = 100'000;
    o.seed = 99;
    const auto w = [&](const GaugeField& U) { return weight_linearized(fx.polygon, U, fx.h, 0.5); };
    const auto f = [&](const GaugeField& U) { return weight_prelinearized(fx.polygon, U, 0.5); };
    const auto a = mc_expectation(fx.polygon, fx.h, w, f, o);
    o.workers = 8;
    const auto b = mc_expectation(fx.polygon, fx.h, w, f, o);
    EXPECT_EQ(a.expectation.value, b.expectation.value);
    EXPECT_EQ(a.expectation.std_error, b.expectation.std_error);
    EXPECT_EQ(a.normalization.value, b.normalization.value);
    o.seed = 100;
    EXPECT_NE(mc_expectation(fx.polygon, fx.h, w, f, o).expectation.value, a.expectation.value);
}

TEST(MonteCarlo, DegenerateNormalization) {
    Fixture fx;
    MonteCarloOptions o;
    o.samples = 100;
    try {
        mc_expectation(fx.polygon, fx.h, [](const GaugeField&) { return 0.0; },
                       [](const GaugeField&) { return 1.0; }, o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::degenerate_normalization);
    }
}

TEST(MonteCarlo, MomentsMatchDirectComputation) {
    MonteCarloOptions o;
    o.samples = 10'007;
    o.block_size = 1000;
    const auto m = mc_moments(
        [] {
            return [](Rng& rng, std::span<double> out) {
                std::uniform_real_distribution<double> u(0.0, 1.0);
                out[0] = u(rng);
                out[1] = 2 * out[0] + 1;
            };
        },
        2, o);
    EXPECT_EQ(m.n, 10'007u);
    EXPECT_NEAR(m.mean[1], 2 * m.mean[0] + 1, 1e-12);
    EXPECT_NEAR(m.covariance(1, 1), 4 * m.covariance(0, 0), 1e-12);
    EXPECT_NEAR(m.covariance(0, 1), 2 * m.covariance(0, 0), 1e-12);
    EXPECT_NEAR(m.covariance(0, 0), 1.0 / 12.0, 0.005);
    // Perfectly correlated pair: the difference 2x+1 - x has variance var(x).
    EXPECT_NEAR(m.difference(1, 0).std_error, std::sqrt(m.covariance(0, 0) / 10'007.0), 1e-12);
}

TEST(MonteCarlo, ImaginarySampler) {
    Fixture fx;
    GaugeField U(fx.polygon, fx.h);
    Rng rng = substream(1, 1);
    sample_links(fx.polygon, U, LinkSampler::imaginary, rng);
    for (int e : fx.polygon.interior_edges()) {
        EXPECT_EQ(U[e].re(), 0.0);
        EXPECT_NEAR(U[e].norm(), 1.0, unit_tolerance);
    }
}

}  // namespace
}  // namespace lgt
