#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lgt/estimate.hpp"
#include "lgt/gauge.hpp"
#include "lgt/rng.hpp"

namespace lgt {

struct MonteCarloOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    int workers = 1;
    /// Samples per substream. Block b draws from substream(seed, stream_offset + b).
    std::uint64_t block_size = std::uint64_t{1} << 14;
    std::uint64_t stream_offset = 0;
};

/// Sample means and covariances of several outputs.
struct Moments {
    std::uint64_t n = 0;
    std::vector<double> mean;
    /// Row-major k x k matrix of sums of centred cross products.
    std::vector<double> comoment;

    std::size_t outputs() const { return mean.size(); }
    double covariance(std::size_t a, std::size_t b) const;
    /// Mean of output a with its standard error.
    Estimate estimate(std::size_t a) const;
    /// Mean of output a minus mean of output b; the standard error accounts
    /// for their correlation.
    Estimate difference(std::size_t a, std::size_t b) const;
    /// mean(a) / mean(b) with a delta-method standard error. Throws
    /// Error(degenerate_normalization) if mean(b) <= 0.
    Estimate ratio(std::size_t a, std::size_t b) const;
    /// Standard error of ratio(a, b) - ratio(c, d).
    double ratio_difference_error(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
};

/// Fills `out` with the outputs of one sample drawn from `rng`.
using SampleFunction = std::function<void(Rng& rng, std::span<double> out)>;
/// Creates a SampleFunction owning its scratch space; called once per block.
using SampleFactory = std::function<SampleFunction()>;

/// Runs options.samples samples in blocks and merges the moments in block
/// order, so the result depends on (seed, block_size) but not on workers.
Moments mc_moments(const SampleFactory& factory, std::size_t n_outputs,
                   const MonteCarloOptions& options);

enum class LinkSampler {
    haar,       ///< uniform on the unit sphere of the field's kind
    imaginary,  ///< uniform on S^2, purely imaginary unit quaternions
};

/// Draws every nonboundary link of `field` independently.
void sample_links(const TriangulatedPolygon& polygon, GaugeField& field, LinkSampler sampler,
                  Rng& rng);

using FieldFunction = std::function<double(const GaugeField&)>;

struct ExpectationResult {
    Estimate expectation;
    Estimate normalization;
};

/// E f under the density proportional to `weight`, by sampling the
/// nonboundary links uniformly: mean(f w) / mean(w). Throws
/// Error(degenerate_normalization) when the estimate of mean(w) is not positive.
ExpectationResult mc_expectation(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                                 const FieldFunction& weight, const FieldFunction& f,
                                 const MonteCarloOptions& options,
                                 LinkSampler sampler = LinkSampler::haar);

}  // namespace lgt
