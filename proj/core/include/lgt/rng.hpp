#pragma once

#include <cstdint>
#include <random>

namespace lgt {

using Rng = std::mt19937_64;

// Deterministic substream for (seed, stream). Streams are addressed by work
// item (sample block, grid block, mesh) rather than by worker thread, so a
// result never depends on how many workers were used.
inline Rng substream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
        0x6c677431u,
    };
    return Rng(seq);
}

}  // namespace lgt
