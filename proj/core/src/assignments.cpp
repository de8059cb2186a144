#include "lgt/assignments.hpp"

#include <string>

#include "lgt/error.hpp"

namespace lgt {

SpinRange::SpinRange(const TriangulatedPolygon& polygon, const std::vector<int>& boundary)
    : interior_(polygon.interior_vertices().begin(), polygon.interior_vertices().end()) {
    if (boundary.size() != polygon.vertices().size()) {
        fail(ErrorKind::invalid_argument, "spin boundary must be indexed by vertex id");
    }
    if (static_cast<int>(interior_.size()) > max_enumerated_spin_vertices) {
        fail(ErrorKind::resource_limit,
             "spin enumeration over " + std::to_string(interior_.size()) +
                 " interior vertices exceeds the limit of " +
                 std::to_string(max_enumerated_spin_vertices));
    }
    first_.spin = boundary;
    for (int b : polygon.boundary_vertices()) {
        const int s = boundary[static_cast<std::size_t>(b)];
        if (s != 1 && s != -1) {
            fail(ErrorKind::invalid_argument, "boundary spins must be +1 or -1");
        }
    }
    for (int v : interior_) first_.spin[static_cast<std::size_t>(v)] = 1;
}

SpinRange::iterator SpinRange::begin() const {
    iterator it;
    it.range_ = this;
    it.index_ = 0;
    it.current_ = first_;
    return it;
}

SpinRange::iterator SpinRange::end() const {
    iterator it;
    it.range_ = this;
    it.index_ = size();
    return it;
}

SpinRange::iterator& SpinRange::iterator::operator++() {
    ++index_;
    if (index_ >= range_->size()) {
        return *this;
    }
    // Binary odometer: flip trailing -1 spins back to +1, then flip one +1.
    for (int v : range_->interior_) {
        int& s = current_.spin[static_cast<std::size_t>(v)];
        if (s == 1) {
            s = -1;
            break;
        }
        s = 1;
    }
    return *this;
}

PottsRange::PottsRange(const TriangulatedPolygon& polygon, int n_units,
                       const std::vector<int>& boundary, bool antiferromagnetic)
    : polygon_(&polygon),
      n_units_(n_units),
      antiferromagnetic_(antiferromagnetic),
      interior_(polygon.interior_vertices().begin(), polygon.interior_vertices().end()) {
    if (n_units < 1) fail(ErrorKind::invalid_argument, "unit set must be nonempty");
    if (boundary.size() != polygon.vertices().size()) {
        fail(ErrorKind::invalid_argument, "Potts boundary must be indexed by vertex id");
    }
    for (std::size_t i = 0; i < interior_.size(); ++i) {
        if (raw_size_ > max_enumerated_potts / static_cast<std::uint64_t>(n_units)) {
            fail(ErrorKind::resource_limit,
                 "Potts enumeration of " + std::to_string(n_units) + "^" +
                     std::to_string(interior_.size()) + " assignments exceeds the limit");
        }
        raw_size_ *= static_cast<std::uint64_t>(n_units);
    }
    for (int b : polygon.boundary_vertices()) {
        const int u = boundary[static_cast<std::size_t>(b)];
        if (u < 0 || u >= n_units) fail(ErrorKind::invalid_argument, "boundary unit out of range");
    }
    first_.unit = boundary;
    for (int v : interior_) first_.unit[static_cast<std::size_t>(v)] = 0;

    if (antiferromagnetic_) {
        for (const Edge& e : polygon.edges()) {
            const auto& verts = polygon.vertices();
            if (verts[static_cast<std::size_t>(e.from)].boundary &&
                verts[static_cast<std::size_t>(e.to)].boundary &&
                boundary[static_cast<std::size_t>(e.from)] == boundary[static_cast<std::size_t>(e.to)]) {
                feasible_ = false;
            }
        }
    }
}

bool PottsRange::proper(const PottsAssignment& h) const {
    for (const Edge& e : polygon_->edges()) {
        if (h[e.from] == h[e.to]) return false;
    }
    return true;
}

void PottsRange::iterator::advance_raw() {
    ++index_;
    if (index_ >= range_->raw_size_) return;
    for (int v : range_->interior_) {
        int& u = current_.unit[static_cast<std::size_t>(v)];
        if (++u < range_->n_units_) break;
        u = 0;
    }
}

void PottsRange::iterator::skip_improper() {
    if (!range_->antiferromagnetic_) return;
    while (index_ < range_->raw_size_ && !range_->proper(current_)) advance_raw();
}

PottsRange::iterator PottsRange::begin() const {
    iterator it;
    it.range_ = this;
    if (!feasible_) {
        it.index_ = raw_size_;
        return it;
    }
    it.index_ = 0;
    it.current_ = first_;
    it.skip_improper();
    return it;
}

PottsRange::iterator PottsRange::end() const {
    iterator it;
    it.range_ = this;
    it.index_ = raw_size_;
    return it;
}

PottsRange::iterator& PottsRange::iterator::operator++() {
    advance_raw();
    skip_improper();
    return *this;
}

}  // namespace lgt
