#include "lgt/montecarlo.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "lgt/error.hpp"
#include "lgt/parallel.hpp"

namespace lgt {

namespace {

struct Accumulator {
    std::uint64_t n = 0;
    std::vector<double> mean;
    std::vector<double> comoment;

    explicit Accumulator(std::size_t k) : mean(k, 0.0), comoment(k * k, 0.0) {}

    void add(std::span<const double> x, std::vector<double>& delta) {
        const std::size_t k = mean.size();
        ++n;
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t a = 0; a < k; ++a) {
            delta[a] = x[a] - mean[a];
            mean[a] += delta[a] * inv;
        }
        for (std::size_t a = 0; a < k; ++a) {
            const double after = x[a] - mean[a];
            for (std::size_t b = 0; b < k; ++b) comoment[a * k + b] += after * delta[b];
        }
    }

    void merge(const Accumulator& other) {
        if (other.n == 0) return;
        const std::size_t k = mean.size();
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(other.n);
        const double total = na + nb;
        std::vector<double> delta(k);
        for (std::size_t a = 0; a < k; ++a) delta[a] = other.mean[a] - mean[a];
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                comoment[a * k + b] += other.comoment[a * k + b] + delta[a] * delta[b] * na * nb / total;
            }
        }
        for (std::size_t a = 0; a < k; ++a) mean[a] += delta[a] * nb / total;
        n += other.n;
    }
};

}  // namespace

double Moments::covariance(std::size_t a, std::size_t b) const {
    if (n < 2) return 0.0;
    return comoment[a * outputs() + b] / static_cast<double>(n - 1);
}

Estimate Moments::estimate(std::size_t a) const {
    const double var = covariance(a, a);
    return {mean[a], n > 0 ? std::sqrt(std::max(0.0, var) / static_cast<double>(n)) : 0.0, n,
            Method::monte_carlo};
}

Estimate Moments::difference(std::size_t a, std::size_t b) const {
    const double var = covariance(a, a) - 2.0 * covariance(a, b) + covariance(b, b);
    return {mean[a] - mean[b],
            n > 0 ? std::sqrt(std::max(0.0, var) / static_cast<double>(n)) : 0.0, n,
            Method::monte_carlo};
}

Estimate Moments::ratio(std::size_t a, std::size_t b) const {
    if (!(mean[b] > 0.0)) {
        fail(ErrorKind::degenerate_normalization,
             "estimated normalization " + std::to_string(mean[b]) + " is not positive");
    }
    const double r = mean[a] / mean[b];
    const double var = covariance(a, a) - 2.0 * r * covariance(a, b) + r * r * covariance(b, b);
    const double se =
        n > 0 ? std::sqrt(std::max(0.0, var) / static_cast<double>(n)) / mean[b] : 0.0;
    return {r, se, n, Method::monte_carlo};
}

double Moments::ratio_difference_error(std::size_t a, std::size_t b, std::size_t c,
                                       std::size_t d) const {
    if (!(mean[b] > 0.0) || !(mean[d] > 0.0)) {
        fail(ErrorKind::degenerate_normalization, "estimated normalization is not positive");
    }
    // Gradient of mean(a)/mean(b) - mean(c)/mean(d) with respect to the means.
    const std::size_t k = outputs();
    std::vector<double> grad(k, 0.0);
    grad[a] += 1.0 / mean[b];
    grad[b] -= mean[a] / (mean[b] * mean[b]);
    grad[c] -= 1.0 / mean[d];
    grad[d] += mean[c] / (mean[d] * mean[d]);
    double var = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) var += grad[i] * grad[j] * covariance(i, j);
    }
    return n > 0 ? std::sqrt(std::max(0.0, var) / static_cast<double>(n)) : 0.0;
}

Moments mc_moments(const SampleFactory& factory, std::size_t n_outputs,
                   const MonteCarloOptions& options) {
    if (options.samples < 1) fail(ErrorKind::invalid_argument, "sample count must be >= 1");
    if (options.block_size < 1) fail(ErrorKind::invalid_argument, "block size must be >= 1");

    const std::uint64_t n_blocks = (options.samples + options.block_size - 1) / options.block_size;
    std::vector<Accumulator> blocks(n_blocks, Accumulator(n_outputs));

    run_blocks(n_blocks, options.workers, [&](std::size_t block) {
        const std::uint64_t begin = block * options.block_size;
        const std::uint64_t end = std::min(options.samples, begin + options.block_size);
        Rng rng = substream(options.seed, options.stream_offset + block);
        SampleFunction sample = factory();
        std::vector<double> out(n_outputs), delta(n_outputs);
        Accumulator& acc = blocks[block];
        for (std::uint64_t i = begin; i < end; ++i) {
            sample(rng, out);
            acc.add(out, delta);
        }
    });

    Accumulator total(n_outputs);
    for (const auto& b : blocks) total.merge(b);
    return {total.n, std::move(total.mean), std::move(total.comoment)};
}

void sample_links(const TriangulatedPolygon& polygon, GaugeField& field, LinkSampler sampler,
                  Rng& rng) {
    SphereSampler sphere;
    const auto n = static_cast<int>(polygon.interior_edges().size());
    for (int s = 0; s < n; ++s) {
        if (sampler == LinkSampler::imaginary) {
            field.set_interior(polygon, s, sphere.imaginary_unit(rng));
        } else {
            field.set_interior(polygon, s, sphere.unit(field.kind(), rng));
        }
    }
}

ExpectationResult mc_expectation(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                                 const FieldFunction& weight, const FieldFunction& f,
                                 const MonteCarloOptions& options, LinkSampler sampler) {
    if (sampler == LinkSampler::imaginary && kind_of(bc) != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "S^2 links require a quaternion boundary condition");
    }
    const GaugeField base(polygon, bc);
    const SampleFactory factory = [&]() -> SampleFunction {
        auto field = std::make_shared<GaugeField>(base);
        return [&, field](Rng& rng, std::span<double> out) {
            sample_links(polygon, *field, sampler, rng);
            const double w = weight(*field);
            out[0] = f(*field) * w;
            out[1] = w;
        };
    };
    const Moments m = mc_moments(factory, 2, options);
    return {m.ratio(0, 1), m.estimate(1)};
}

}  // namespace lgt
