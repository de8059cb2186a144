#include "lgt/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lgt/error.hpp"
#include "lgt/parallel.hpp"

namespace lgt {

namespace {

// Neumaier compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

constexpr std::uint64_t target_blocks = 256;

}  // namespace

U1Angles::U1Angles(std::span<const double> theta) : theta_(theta.begin(), theta.end()) {
    cos_.reserve(theta_.size());
    sin_.reserve(theta_.size());
    for (double t : theta_) {
        cos_.push_back(std::cos(t));
        sin_.push_back(std::sin(t));
    }
}

std::vector<Estimate> integrate_u1_multi(const U1MultiIntegrand& integrand, std::size_t n_outputs,
                                         std::size_t n_edges, const QuadratureOptions& options) {
    const int M = options.grid;
    if (M < 1) fail(ErrorKind::invalid_argument, "grid size must be >= 1");

    std::uint64_t total = 1;
    for (std::size_t e = 0; e < n_edges; ++e) {
        if (total > options.max_points / static_cast<std::uint64_t>(M)) {
            fail(ErrorKind::resource_limit,
                 "grid of " + std::to_string(M) + "^" + std::to_string(n_edges) +
                     " points exceeds the limit of " + std::to_string(options.max_points));
        }
        total *= static_cast<std::uint64_t>(M);
    }

    std::vector<double> theta_table(static_cast<std::size_t>(M));
    std::vector<double> cos_table(static_cast<std::size_t>(M));
    std::vector<double> sin_table(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) {
        const double t = 2.0 * std::numbers::pi * m / M;
        theta_table[static_cast<std::size_t>(m)] = t;
        cos_table[static_cast<std::size_t>(m)] = std::cos(t);
        sin_table[static_cast<std::size_t>(m)] = std::sin(t);
    }

    const std::uint64_t block_size = std::max<std::uint64_t>(1, (total + target_blocks - 1) / target_blocks);
    const std::uint64_t n_blocks = (total + block_size - 1) / block_size;
    std::vector<std::vector<CompensatedSum>> partial(n_blocks, std::vector<CompensatedSum>(n_outputs));

    run_blocks(n_blocks, options.workers, [&](std::size_t block) {
        const std::uint64_t begin = block * block_size;
        const std::uint64_t end = std::min(total, begin + block_size);

        // Digit 0 varies fastest.
        std::vector<int> digit(n_edges);
        std::uint64_t rest = begin;
        for (std::size_t e = 0; e < n_edges; ++e) {
            digit[e] = static_cast<int>(rest % static_cast<std::uint64_t>(M));
            rest /= static_cast<std::uint64_t>(M);
        }
        std::vector<double> theta(n_edges), c(n_edges), s(n_edges);
        for (std::size_t e = 0; e < n_edges; ++e) {
            const auto d = static_cast<std::size_t>(digit[e]);
            theta[e] = theta_table[d];
            c[e] = cos_table[d];
            s[e] = sin_table[d];
        }
        std::vector<double> out(n_outputs);
        auto& sums = partial[block];
        const U1Point point{theta, c, s};

        for (std::uint64_t i = begin; i < end; ++i) {
            integrand(point, out);
            for (std::size_t k = 0; k < n_outputs; ++k) sums[k].add(out[k]);
            for (std::size_t e = 0; e < n_edges; ++e) {
                int& d = digit[e];
                if (++d == M) d = 0;
                const auto dd = static_cast<std::size_t>(d);
                theta[e] = theta_table[dd];
                c[e] = cos_table[dd];
                s[e] = sin_table[dd];
                if (d != 0) break;
            }
        }
    });

    std::vector<Estimate> result;
    result.reserve(n_outputs);
    for (std::size_t k = 0; k < n_outputs; ++k) {
        CompensatedSum acc;
        for (const auto& block : partial) {
            acc.add(block[k].sum);
            acc.add(block[k].carry);
        }
        double value = acc.value() / static_cast<double>(total);
        if (options.measure == Measure::lebesgue) {
            value *= std::pow(2.0 * std::numbers::pi, static_cast<double>(n_edges));
        }
        result.push_back(Estimate::exact(value, total, Method::quadrature));
    }
    return result;
}

Estimate integrate_u1(const U1Integrand& integrand, std::size_t n_edges,
                      const QuadratureOptions& options) {
    return integrate_u1_multi(
        [&](const U1Point& p, std::span<double> out) { out[0] = integrand(p); }, 1, n_edges,
        options)[0];
}

U1Model::U1Model(const TriangulatedPolygon& polygon, const SqrtSigma& sigma)
    : polygon_(&polygon), sigma_(sigma) {
    if (polygon.interior_edges().size() > 64) {
        fail(ErrorKind::resource_limit, "U1Model supports at most 64 nonboundary edges");
    }
    const GaugeField boundary(polygon, sigma_);
    for (const Face& f : polygon.faces()) {
        FaceTerm term{{1.0, 0.0}, {-1, -1, -1}, 0};
        for (int e : f.edges) {
            const int slot = polygon.interior_edge_slot(e);
            if (slot < 0) {
                const auto& u = boundary[e];
                term.boundary *= std::complex<double>(u[0], u[1]);
            } else {
                term.slots[static_cast<std::size_t>(term.n_slots++)] = slot;
            }
        }
        faces_.push_back(term);
    }
    for (const auto& spins : SpinRange(polygon, sigma_.sigma)) {
        std::uint64_t mask = 0;
        for (std::size_t s = 0; s < polygon.interior_edges().size(); ++s) {
            const Edge& e = polygon.edges()[static_cast<std::size_t>(polygon.interior_edges()[s])];
            if (spins[e.from] == spins[e.to]) mask |= std::uint64_t{1} << s;
        }
        spin_masks_.push_back(mask);
        states_.push_back(spins);
    }
}

double U1Model::holonomy_re(const U1Point& p, std::size_t face) const {
    const FaceTerm& t = faces_[face];
    double re = t.boundary.real();
    double im = t.boundary.imag();
    for (int k = 0; k < t.n_slots; ++k) {
        const auto s = static_cast<std::size_t>(t.slots[static_cast<std::size_t>(k)]);
        const double c = p.cos[s];
        const double sn = p.sin[s];
        const double nre = re * c - im * sn;
        im = re * sn + im * c;
        re = nre;
    }
    return re;
}

double U1Model::weight_exp(const U1Point& p, double beta) const {
    double action = 0.0;
    for (std::size_t f = 0; f < faces_.size(); ++f) action += holonomy_re(p, f);
    return std::exp(beta * action);
}

double U1Model::weight_prelinearized(const U1Point& p, double beta) const {
    double w = 1.0;
    for (std::size_t f = 0; f < faces_.size(); ++f) w *= 1.0 + beta * holonomy_re(p, f);
    return w;
}

double U1Model::weight_spin(const U1Point& p, std::size_t state) const {
    const std::uint64_t mask = spin_masks_[state];
    double w = 1.0;
    for (std::size_t s = 0; s < p.cos.size(); ++s) {
        const double v = (mask >> s) & 1u ? p.cos[s] : p.sin[s];
        w *= v * v;
    }
    return w;
}

double U1Model::spin_sum(const U1Point& p) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < spin_masks_.size(); ++k) sum += weight_spin(p, k);
    return sum;
}

double U1Model::weight_linearized(const U1Point& p, double beta) const {
    const double sum = spin_sum(p);
    if (std::isinf(beta) && beta > 0) return sum;
    return 1.0 + std::pow(beta, static_cast<double>(faces_.size())) * sum;
}

GaugeField U1Model::field(const U1Point& p) const {
    return GaugeField::from_angles(*polygon_, sigma_, p.theta);
}

}  // namespace lgt
