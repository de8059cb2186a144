#include "lgt/hexpotts.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lgt/error.hpp"
#include "lgt/parallel.hpp"

namespace lgt {

void sample_coloring(const HexDomain& domain, Rng& rng, HexColoring& out) {
    const auto n = static_cast<std::size_t>(domain.size());
    out.color.resize(n);
    std::uint64_t word = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (c % 32 == 0) word = rng();
        out.color[c] = static_cast<std::uint8_t>((word & 3u) + 1u);
        word >>= 2;
    }
}

HexColoring sample_coloring(const HexDomain& domain, Rng& rng) {
    HexColoring out;
    sample_coloring(domain, rng, out);
    return out;
}

CrossingSolver::CrossingSolver(const HexDomain& domain)
    : domain_(&domain), parent_(static_cast<std::size_t>(domain.size())) {}

int CrossingSolver::find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

bool CrossingSolver::crosses(const HexColoring& coloring, int arc_a, int arc_b, unsigned colors) {
    const HexDomain& d = *domain_;
    auto open = [&](int c) { return (colors >> (coloring.color[static_cast<std::size_t>(c)] - 1)) & 1u; };

    std::iota(parent_.begin(), parent_.end(), 0);
    for (int c = 0; c < d.size(); ++c) {
        if (!open(c)) continue;
        // Directions 0, 4, 5 cover every adjacent pair once.
        for (std::size_t k : {0u, 4u, 5u}) {
            const int nb = d.neighbors[static_cast<std::size_t>(c)][k];
            if (nb >= 0 && open(nb)) {
                const int ra = find(c);
                const int rb = find(nb);
                if (ra != rb) parent_[static_cast<std::size_t>(ra)] = rb;
            }
        }
    }
    for (int a : d.arcs[static_cast<std::size_t>(arc_a)]) {
        if (!open(a)) continue;
        const int ra = find(a);
        for (int b : d.arcs[static_cast<std::size_t>(arc_b)]) {
            if (open(b) && find(b) == ra) return true;
        }
    }
    return false;
}

bool CrossingSolver::event(const HexColoring& coloring, int m) {
    if (m < 1 || m > 3) fail(ErrorKind::invalid_argument, "event index must be 1, 2 or 3");
    return crosses(coloring, m - 1, m + 2, color_mask(m, 4));
}

bool event(const HexDomain& domain, const HexColoring& coloring, int m) {
    return CrossingSolver(domain).event(coloring, m);
}

IndependenceResult independence_from_histogram(const std::array<std::uint64_t, 8>& histogram) {
    IndependenceResult r;
    r.histogram = histogram;
    r.n = std::accumulate(histogram.begin(), histogram.end(), std::uint64_t{0});
    if (r.n == 0) fail(ErrorKind::invalid_argument, "empty histogram");
    const auto n = static_cast<double>(r.n);

    std::array<double, 8> pi{};
    for (std::size_t c = 0; c < 8; ++c) pi[c] = static_cast<double>(histogram[c]) / n;
    auto bit = [](std::size_t c, int m) { return static_cast<double>((c >> (m - 1)) & 1u); };

    // Mean and standard error of sum_c pi_c g(c) for an outcome function g.
    auto linear = [&](auto g) {
        double m1 = 0.0;
        double m2 = 0.0;
        for (std::size_t c = 0; c < 8; ++c) {
            const double v = g(c);
            m1 += pi[c] * v;
            m2 += pi[c] * v * v;
        }
        return std::pair{m1, std::sqrt(std::max(0.0, m2 - m1 * m1) / n)};
    };
    auto probability = [&](auto event) {
        const auto [value, se] = linear([&](std::size_t c) { return event(c) ? 1.0 : 0.0; });
        return Estimate{value, se, r.n, Method::monte_carlo};
    };

    r.p1 = probability([&](std::size_t c) { return bit(c, 1) > 0; });
    r.p2 = probability([&](std::size_t c) { return bit(c, 2) > 0; });
    r.p3 = probability([&](std::size_t c) { return bit(c, 3) > 0; });
    r.p12 = probability([&](std::size_t c) { return bit(c, 1) * bit(c, 2) > 0; });
    r.p13 = probability([&](std::size_t c) { return bit(c, 1) * bit(c, 3) > 0; });
    r.p23 = probability([&](std::size_t c) { return bit(c, 2) * bit(c, 3) > 0; });
    r.p123 = probability([&](std::size_t c) { return c == 7; });

    const double q1 = r.p1.value, q2 = r.p2.value, q3 = r.p3.value;
    {
        // Gradient of p123 - p1 p2 p3 with respect to the histogram frequencies.
        const auto [_, se] = linear([&](std::size_t c) {
            return (c == 7 ? 1.0 : 0.0) -
                   (bit(c, 1) * q2 * q3 + bit(c, 2) * q1 * q3 + bit(c, 3) * q1 * q2);
        });
        r.triple_defect = {r.p123.value - q1 * q2 * q3, se, r.n, Method::monte_carlo};
    }
    auto pairwise = [&](int a, int b, double pab, double qa, double qb) {
        const auto [_, se] = linear([&](std::size_t c) {
            return bit(c, a) * bit(c, b) - (bit(c, a) * qb + bit(c, b) * qa);
        });
        return Estimate{pab - qa * qb, se, r.n, Method::monte_carlo};
    };
    r.pairwise_defects = {pairwise(1, 2, r.p12.value, q1, q2), pairwise(1, 3, r.p13.value, q1, q3),
                          pairwise(2, 3, r.p23.value, q2, q3)};
    return r;
}

std::vector<IndependenceResult> run_independence_experiment(int side,
                                                            const std::vector<int>& mesh_divisors,
                                                            const ExperimentOptions& options) {
    if (options.samples < 10'000) {
        fail(ErrorKind::invalid_argument,
             "the independence experiment needs at least 10^4 samples, got " +
                 std::to_string(options.samples));
    }
    if (options.block_size < 1) fail(ErrorKind::invalid_argument, "block size must be >= 1");

    std::vector<IndependenceResult> results;
    for (int divisor : mesh_divisors) {
        const HexDomain domain = build_hex_domain(side, divisor);
        const std::uint64_t n_blocks = (options.samples + options.block_size - 1) / options.block_size;
        std::vector<std::array<std::uint64_t, 8>> counts(n_blocks);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(side) << 48) ^ (static_cast<std::uint64_t>(divisor) << 32);

        run_blocks(n_blocks, options.workers, [&](std::size_t block) {
            const std::uint64_t begin = block * options.block_size;
            const std::uint64_t end = std::min(options.samples, begin + options.block_size);
            Rng rng = substream(options.seed, key + block);
            CrossingSolver solver(domain);
            HexColoring coloring;
            auto& hist = counts[block];
            hist.fill(0);
            for (std::uint64_t i = begin; i < end; ++i) {
                sample_coloring(domain, rng, coloring);
                std::size_t outcome = 0;
                for (int m = 1; m <= 3; ++m) {
                    if (solver.event(coloring, m)) outcome |= std::size_t{1} << (m - 1);
                }
                ++hist[outcome];
            }
        });

        std::array<std::uint64_t, 8> total{};
        for (const auto& h : counts) {
            for (std::size_t c = 0; c < 8; ++c) total[c] += h[c];
        }
        IndependenceResult r = independence_from_histogram(total);
        r.side = side;
        r.mesh_divisor = divisor;
        r.mesh = domain.mesh;
        r.cells = domain.size();
        r.seed = options.seed;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace lgt
