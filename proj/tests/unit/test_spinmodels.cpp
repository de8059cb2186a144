#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <queue>
#include <set>

#include "lgt/error.hpp"
#include "lgt/spinmodels.hpp"

namespace lgt {
namespace {

const double pi = std::numbers::pi;

struct Hexagon {
    TriangulatedPolygon polygon = build_hexagon_example();
    HexagonLabels labels = hexagon_labels(polygon);
    SqrtSigma sigma = hexagon_example_sigma(polygon);

    GaugeField field(const std::array<double, 6>& t) const {
        std::vector<double> theta(6);
        for (std::size_t n = 0; n < 6; ++n) {
            theta[static_cast<std::size_t>(polygon.interior_edge_slot(labels.spokes[n]))] = t[n];
        }
        return GaugeField::from_angles(polygon, sigma, theta);
    }
};

TEST(Enumeration, SpinCounts) {
    const Hexagon h;
    const SpinRange one(h.polygon, h.sigma.sigma);
    EXPECT_EQ(std::distance(one.begin(), one.end()), 2);

    const auto p2 = build_hexagon(2);
    const std::vector<int> plus(p2.vertices().size(), 1);
    std::set<std::vector<int>> seen;
    for (const auto& s : SpinRange(p2, plus)) {
        for (int b : p2.boundary_vertices()) EXPECT_EQ(s[b], 1);
        seen.insert(s.spin);
    }
    EXPECT_EQ(seen.size(), 128u);
    EXPECT_EQ(SpinRange(h.polygon, h.sigma.sigma).begin()->spin[static_cast<std::size_t>(h.labels.center)], 1);
}

TEST(Enumeration, SpinGuard) {
    const auto big = build_hexagon(4);
    ASSERT_GT(big.interior_vertices().size(), 25u);
    try {
        SpinRange r(big, std::vector<int>(big.vertices().size(), 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
}

TEST(Enumeration, PottsCounts) {
    const Hexagon h;
    const std::vector<int> ones(h.polygon.vertices().size(), 0);
    const PottsRange all(h.polygon, 4, ones, false);
    EXPECT_EQ(std::distance(all.begin(), all.end()), 4);

    // Boundary alternating among three values: H(O) must avoid all of them.
    std::vector<int> alt(h.polygon.vertices().size(), 0);
    for (std::size_t n = 0; n < 6; ++n) alt[static_cast<std::size_t>(h.labels.corners[n])] = static_cast<int>(n % 3);
    int direct = 0;
    for (int x = 0; x < 4; ++x) direct += (x != 0 && x != 1 && x != 2);
    const PottsRange af(h.polygon, 4, alt, true);
    EXPECT_EQ(std::distance(af.begin(), af.end()), direct);
    EXPECT_EQ(af.begin()->unit[static_cast<std::size_t>(h.labels.center)], 3);

    // Infeasible boundary: empty, not an error.
    std::vector<int> bad(h.polygon.vertices().size(), 0);
    const PottsRange none(h.polygon, 4, bad, true);
    EXPECT_EQ(none.begin(), none.end());

    // |S| = 2 matches the spin enumeration.
    const auto p = build_double_hexagon();
    const std::vector<int> zero(p.vertices().size(), 0);
    const PottsRange two(p, 2, zero, false);
    const SpinRange spins(p, std::vector<int>(p.vertices().size(), 1));
    auto s = spins.begin();
    for (const auto& H : two) {
        ASSERT_NE(s, spins.end());
        for (int v : p.interior_vertices()) EXPECT_EQ(H[v] == 0 ? 1 : -1, (*s)[v]);
        ++s;
    }
    EXPECT_EQ(s, spins.end());
}

TEST(Spinmodels, ConditionalObservableExamples) {
    const Hexagon h;
    Rng rng = substream(31, 0);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    const SpinFunction center = [&](const SpinAssignment& s) { return s[h.labels.center] == 1 ? 1.0 : 0.0; };
    for (int t = 0; t < 200; ++t) {
        std::array<double, 6> theta{};
        for (double& x : theta) x = angle(rng);
        const GaugeField U = h.field(theta);
        EXPECT_NEAR(conditional_observable(h.polygon, h.sigma, [](const SpinAssignment&) { return 2.5; }, U), 2.5, 1e-12);
        EXPECT_NEAR(conditional_observable(h.polygon, h.sigma, center, U), hexagon_f(theta), 1e-12);
        EXPECT_NEAR(hexagon_fprime(theta, 0.0), hexagon_f(theta), 0.0);
    }
    std::array<double, 6> quarter{};
    quarter.fill(pi / 4);
    EXPECT_NEAR(conditional_observable(h.polygon, h.sigma, center, h.field(quarter)), 0.5, 1e-12);
    std::array<double, 6> only_plus{};
    only_plus[1] = pi / 2;
    only_plus[4] = pi / 2;
    EXPECT_EQ(hexagon_f(only_plus), 1.0);

    // theta = 0 on spokes 1 and 2 kills both spin weights.
    const std::array<double, 6> dead{};
    try {
        conditional_observable(h.polygon, h.sigma, center, h.field(dead));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::degenerate_configuration);
    }
}

TEST(Spinmodels, FprimeIsGaugeInvariant) {
    Rng rng = substream(32, 0);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    for (int t = 0; t < 1000; ++t) {
        std::array<double, 6> theta{};
        for (double& x : theta) x = angle(rng);
        const double eta = angle(rng);
        const double alpha = angle(rng);
        // g(O) = e^{i alpha}: spokes leaving O gain alpha, entering lose it; eta gains alpha.
        std::array<double, 6> moved{};
        for (std::size_t n = 0; n < 6; ++n) moved[n] = theta[n] + (n % 2 == 0 ? alpha : -alpha);
        EXPECT_NEAR(hexagon_fprime(moved, eta + alpha), hexagon_fprime(theta, eta), 1e-9);
    }
}

TEST(Spinmodels, CrossingProbabilityIsOneHalf) {
    const Hexagon h;
    const SpinFunction crossing = [&](const SpinAssignment& s) {
        return static_cast<double>(crossing_indicator_hexagon(h.polygon, s));
    };
    for (const auto& s : SpinRange(h.polygon, h.sigma.sigma)) {
        EXPECT_EQ(crossing(s), s[h.labels.center] == 1 ? 1.0 : 0.0);
    }
    const Estimate p = percolation_expectation(h.polygon, h.sigma, crossing);
    EXPECT_EQ(p.value, 0.5);
    EXPECT_EQ(p.method, Method::enumeration);

    const U1Model model(h.polygon, h.sigma);
    EXPECT_NEAR(conditional_expectation(model, crossing, {}).value, 0.5, 1e-9);
}

TEST(Spinmodels, ZInfinityAndMarginals) {
    const Hexagon h;
    const U1Model model(h.polygon, h.sigma);
    EXPECT_NEAR(z_infinity(model, {}).value, 2 * std::pow(pi, 6), 1e-9);
    Rng rng = substream(33, 0);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> theta(6);
        for (double& x : theta) x = angle(rng);
        const U1Angles a(theta);
        double sum = 0.0;
        for (const auto& s : SpinRange(h.polygon, h.sigma.sigma)) {
            sum += random_medium_ising_density(h.polygon, model.field(a.point()), s);
        }
        EXPECT_NEAR(sum, weight_linearized_u1(h.polygon, model.field(a.point()), h.sigma,
                                              std::numeric_limits<double>::infinity()), 1e-14);
    }
}

TEST(Spinmodels, CorollaryForPseudoBooleanFunctions) {
    const auto p = build_double_hexagon();
    const SqrtSigma sigma = hexagon_example_sigma(p);
    const U1Model model(p, sigma);
    QuadratureOptions o;
    o.measure = Measure::haar;
    Rng rng = substream(34, 0);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        // f(Sigma) = c0 + sum_v c_v s_v + c_12 s_1 s_2 on the two interior vertices.
        const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c12 = coef(rng);
        const int v1 = p.interior_vertices()[0];
        const int v2 = p.interior_vertices()[1];
        const SpinFunction f = [=](const SpinAssignment& s) {
            return c0 + c1 * s[v1] + c2 * s[v2] + c12 * s[v1] * s[v2];
        };
        EXPECT_NEAR(conditional_expectation(model, f, o).value, percolation_expectation(p, sigma, f).value, 1e-9);
        EXPECT_NEAR(percolation_expectation(p, sigma, f).value, c0, 1e-15);
    }
}

TEST(Spinmodels, ConditioningReducesVariance) {
    const Hexagon h;
    const U1Model model(h.polygon, h.sigma);
    const SpinFunction crossing = [&](const SpinAssignment& s) {
        return static_cast<double>(crossing_indicator_hexagon(h.polygon, s));
    };
    QuadratureOptions o;
    o.grid = 8;
    const VarianceComparison v = compare_variances(model, crossing, o);
    EXPECT_DOUBLE_EQ(v.direct, 0.25);
    EXPECT_LT(v.conditional, v.direct - std::abs(v.conditional - v.conditional_coarse));
    o.grid = 5;
    EXPECT_THROW(compare_variances(model, crossing, o), Error);
}

// Breadth-first search oracle for crossing_event.
bool bfs_crossing(const TriangulatedPolygon& p, const SpinAssignment& s, std::span<const int> a,
                  std::span<const int> b) {
    std::vector<std::vector<int>> adj(p.vertices().size());
    for (const Edge& e : p.edges()) {
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    std::vector<bool> seen(p.vertices().size());
    std::queue<int> q;
    for (int v : a) {
        if (s[v] == 1) {
            seen[static_cast<std::size_t>(v)] = true;
            q.push(v);
        }
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (s[w] == 1 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                q.push(w);
            }
        }
    }
    for (int v : b) {
        if (seen[static_cast<std::size_t>(v)]) return true;
    }
    return false;
}

TEST(Spinmodels, CrossingEventMatchesBfs) {
    const auto p = build_hexagon(3);
    Rng rng = substream(35, 0);
    std::bernoulli_distribution coin(0.5);
    const auto cycle = p.boundary_vertices();
    const std::size_t n = cycle.size();
    const std::vector<int> arc_a(cycle.begin(), cycle.begin() + static_cast<long>(n / 6 + 1));
    const std::vector<int> arc_b(cycle.begin() + static_cast<long>(n / 2), cycle.begin() + static_cast<long>(n / 2 + n / 6 + 1));
    int hits = 0;
    for (int t = 0; t < 1000; ++t) {
        SpinAssignment s{std::vector<int>(p.vertices().size())};
        for (int& x : s.spin) x = coin(rng) ? 1 : -1;
        const bool uf = crossing_event(p, s, arc_a, arc_b);
        EXPECT_EQ(uf, bfs_crossing(p, s, arc_a, arc_b));
        hits += uf;
    }
    EXPECT_GT(hits, 0);
    EXPECT_LT(hits, 1000);
}

}  // namespace
}  // namespace lgt
