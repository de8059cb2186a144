#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lgt/estimate.hpp"
#include "lgt/lattice.hpp"
#include "lgt/rng.hpp"

namespace lgt {

/// Colour in {1, 2, 3, 4} per domain cell.
struct HexColoring {
    std::vector<std::uint8_t> color;
};

/// I.i.d. uniform colours, two random bits per cell.
HexColoring sample_coloring(const HexDomain& domain, Rng& rng);
void sample_coloring(const HexDomain& domain, Rng& rng, HexColoring& out);

/// Bit c-1 set for every allowed colour c.
constexpr unsigned color_mask(int a, int b) { return (1u << (a - 1)) | (1u << (b - 1)); }

/// Union-find crossing test with reusable scratch space.
class CrossingSolver {
public:
    explicit CrossingSolver(const HexDomain& domain);

    /// True iff a path of cells with allowed colours joins an allowed cell of
    /// arc `arc_a` to one of arc `arc_b`.
    bool crosses(const HexColoring& coloring, int arc_a, int arc_b, unsigned colors);

    /// E_m for m in {1, 2, 3}: arcs A_m A_{m+1} and A_{m+3} A_{m+4}, colours m or 4.
    bool event(const HexColoring& coloring, int m);

private:
    int find(int x);

    const HexDomain* domain_;
    std::vector<int> parent_;
};

bool event(const HexDomain& domain, const HexColoring& coloring, int m);

struct IndependenceResult {
    int side = 0;
    int mesh_divisor = 0;
    double mesh = 0.0;
    int cells = 0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    /// Counts of (E1, E2, E3) outcomes; index bit m-1 is E_m.
    std::array<std::uint64_t, 8> histogram{};

    Estimate p1, p2, p3, p12, p13, p23, p123;
    /// p123 - p1 p2 p3.
    Estimate triple_defect;
    /// p12 - p1 p2, p13 - p1 p3, p23 - p2 p3.
    std::array<Estimate, 3> pairwise_defects;
};

/// Probabilities and delta-method standard errors from a joint histogram.
IndependenceResult independence_from_histogram(const std::array<std::uint64_t, 8>& histogram);

struct ExperimentOptions {
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::uint64_t block_size = 4096;
};

/// One result per mesh divisor, each from its own sample stream keyed by
/// (seed, side, divisor), so adding divisors does not change other rows.
/// Throws Error(invalid_argument) for fewer than 10^4 samples.
std::vector<IndependenceResult> run_independence_experiment(int side,
                                                            const std::vector<int>& mesh_divisors,
                                                            const ExperimentOptions& options);

}  // namespace lgt
