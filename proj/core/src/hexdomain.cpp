#include "lgt/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "lgt/error.hpp"

namespace lgt {

std::optional<int> HexDomain::cell_at(Axial pos) const {
    const auto it = std::lower_bound(cells.begin(), cells.end(), pos);
    if (it == cells.end() || *it != pos) return std::nullopt;
    return static_cast<int>(it - cells.begin());
}

HexDomain build_hex_domain(int side, int mesh_divisor) {
    if (side < 1 || mesh_divisor < 1) {
        fail(ErrorKind::invalid_argument, "hex domain needs side >= 1 and mesh_divisor >= 1");
    }
    const long radius = static_cast<long>(side) * mesh_divisor - 1;
    if (radius > 4000) {
        fail(ErrorKind::resource_limit, "hex domain radius " + std::to_string(radius) + " too large");
    }

    HexDomain d;
    d.side = side;
    d.mesh_divisor = mesh_divisor;
    d.mesh = 1.0 / mesh_divisor;
    d.radius = static_cast<int>(radius);
    const int R = d.radius;

    for (int q = -R; q <= R; ++q) {
        for (int r = -R; r <= R; ++r) {
            if (std::abs(q + r) <= R) d.cells.push_back({q, r});
        }
    }
    std::sort(d.cells.begin(), d.cells.end());

    d.neighbors.resize(d.cells.size());
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
        for (std::size_t k = 0; k < 6; ++k) {
            const auto n = d.cell_at(d.cells[c] + cell_directions[k]);
            d.neighbors[c][k] = n ? *n : -1;
        }
    }

    d.arc_mask.assign(d.cells.size(), 0);
    if (R == 0) {
        for (std::size_t k = 0; k < 6; ++k) {
            d.arcs[k] = {0};
            d.arc_mask[0] |= static_cast<std::uint8_t>(1u << k);
        }
        return d;
    }

    // Walk the outer ring starting at the corner R*cell_directions[4]; corner
    // k sits at ring position k*R and arc k covers positions k*R..(k+1)*R.
    std::vector<int> ring;
    Axial pos{R * cell_directions[4].q, R * cell_directions[4].r};
    for (std::size_t k = 0; k < 6; ++k) {
        for (int s = 0; s < R; ++s) {
            ring.push_back(*d.cell_at(pos));
            pos = pos + cell_directions[k];
        }
    }
    const auto ring_size = ring.size();
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t t = 0; t <= static_cast<std::size_t>(R); ++t) {
            const int cell = ring[(k * static_cast<std::size_t>(R) + t) % ring_size];
            d.arcs[k].push_back(cell);
            d.arc_mask[static_cast<std::size_t>(cell)] |= static_cast<std::uint8_t>(1u << k);
        }
    }
    return d;
}

}  // namespace lgt
