#include "lgt/spinmodels.hpp"

#include <cmath>
#include <numeric>

#include "lgt/error.hpp"

namespace lgt {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

double conditional_observable(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                              const SpinFunction& f, const GaugeField& U) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& spins : SpinRange(polygon, sigma.sigma)) {
        const double w = weight_spin(polygon, U, spins);
        num += f(spins) * w;
        den += w;
    }
    if (den == 0.0) {
        fail(ErrorKind::degenerate_configuration,
             "every spin weight vanishes for this gauge field");
    }
    return num / den;
}

ConditionalObservable::ConditionalObservable(const U1Model& model, const SpinFunction& f)
    : model_(&model) {
    values_.reserve(model.n_spin_states());
    for (std::size_t k = 0; k < model.n_spin_states(); ++k) values_.push_back(f(model.spin_state(k)));
}

double ConditionalObservable::numerator(const U1Point& p) const {
    double num = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] != 0.0) num += values_[k] * model_->weight_spin(p, k);
    }
    return num;
}

double ConditionalObservable::operator()(const U1Point& p) const {
    const double den = model_->spin_sum(p);
    if (den == 0.0) {
        fail(ErrorKind::degenerate_configuration,
             "every spin weight vanishes for this gauge field");
    }
    return numerator(p) / den;
}

Estimate percolation_expectation(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                                 const SpinFunction& f) {
    const SpinRange range(polygon, sigma.sigma);
    double sum = 0.0;
    for (const auto& spins : range) sum += f(spins);
    return Estimate::exact(sum / static_cast<double>(range.size()), range.size(),
                           Method::enumeration);
}

Estimate z_infinity(const U1Model& model, const QuadratureOptions& options) {
    return integrate_u1([&](const U1Point& p) { return model.spin_sum(p); }, model.n_edges(),
                        options);
}

Estimate conditional_expectation(const U1Model& model, const SpinFunction& f,
                                 const QuadratureOptions& options) {
    const ConditionalObservable cond(model, f);
    const auto r = integrate_u1_multi(
        [&](const U1Point& p, std::span<double> out) {
            out[0] = cond.numerator(p);
            out[1] = model.spin_sum(p);
        },
        2, model.n_edges(), options);
    if (!(r[1].value > 0.0)) fail(ErrorKind::degenerate_normalization, "Z''_inf is not positive");
    return Estimate::exact(r[0].value / r[1].value, r[0].n, Method::quadrature);
}

VarianceComparison compare_variances(const U1Model& model, const SpinFunction& f,
                                     const QuadratureOptions& options) {
    if (options.grid % 2 != 0) {
        fail(ErrorKind::invalid_argument, "variance comparison needs an even grid size");
    }
    const ConditionalObservable cond(model, f);
    auto moments = [&](int grid) {
        QuadratureOptions o = options;
        o.grid = grid;
        const auto r = integrate_u1_multi(
            [&](const U1Point& p, std::span<double> out) {
                const double den = model.spin_sum(p);
                const double num = cond.numerator(p);
                out[0] = num;
                out[1] = den == 0.0 ? 0.0 : num * num / den;
                out[2] = den;
            },
            3, model.n_edges(), o);
        const double mean = r[0].value / r[2].value;
        return r[1].value / r[2].value - mean * mean;
    };

    VarianceComparison out;
    out.grid = 2 * options.grid;
    out.conditional_coarse = moments(options.grid);
    out.conditional = moments(out.grid);

    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t k = 0; k < model.n_spin_states(); ++k) {
        const double v = cond.value_of_state(k);
        m1 += v;
        m2 += v * v;
    }
    const auto n = static_cast<double>(model.n_spin_states());
    out.direct = m2 / n - (m1 / n) * (m1 / n);
    return out;
}

bool crossing_event(const TriangulatedPolygon& polygon, const SpinAssignment& spins,
                    std::span<const int> arc_a, std::span<const int> arc_b) {
    UnionFind uf(polygon.vertices().size());
    for (const Edge& e : polygon.edges()) {
        if (spins[e.from] == 1 && spins[e.to] == 1) uf.unite(e.from, e.to);
    }
    for (int a : arc_a) {
        if (spins[a] != 1) continue;
        for (int b : arc_b) {
            if (spins[b] == 1 && uf.find(a) == uf.find(b)) return true;
        }
    }
    return false;
}

int crossing_indicator_hexagon(const TriangulatedPolygon& polygon, const SpinAssignment& spins) {
    const HexagonLabels l = hexagon_labels(polygon);
    const std::array<int, 2> arc_a{l.corners[5], l.corners[0]};
    const std::array<int, 2> arc_b{l.corners[2], l.corners[3]};
    return crossing_event(polygon, spins, arc_a, arc_b) ? 1 : 0;
}

double hexagon_f(std::span<const double> theta) {
    if (theta.size() != 6) fail(ErrorKind::invalid_argument, "hexagon_f takes 6 angles");
    // Spokes 2 and 5 end at the boundary vertices with sigma = -1.
    double plus = 1.0;
    double minus = 1.0;
    for (std::size_t n = 0; n < 6; ++n) {
        const double c = std::cos(theta[n]);
        const double s = std::sin(theta[n]);
        const bool flipped = n == 1 || n == 4;
        plus *= flipped ? s * s : c * c;
        minus *= flipped ? c * c : s * s;
    }
    if (plus + minus == 0.0) {
        fail(ErrorKind::degenerate_configuration, "both hexagon spin weights vanish");
    }
    return plus / (plus + minus);
}

double hexagon_fprime(std::span<const double> theta, double eta) {
    if (theta.size() != 6) fail(ErrorKind::invalid_argument, "hexagon_fprime takes 6 angles");
    std::array<double, 6> shifted{};
    for (std::size_t n = 0; n < 6; ++n) shifted[n] = theta[n] + (n % 2 == 0 ? -eta : eta);
    return hexagon_f(shifted);
}

}  // namespace lgt
