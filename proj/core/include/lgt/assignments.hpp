#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "lgt/lattice.hpp"

namespace lgt {

/// +-1 spin per vertex (indexed by vertex id). Boundary entries hold the
/// boundary condition sigma.
struct SpinAssignment {
    std::vector<int> spin;

    int operator[](int vertex) const { return spin[static_cast<std::size_t>(vertex)]; }
    friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;
};

/// Unit-set index per vertex (0 = 1, 1 = i, 2 = j, ...). Boundary entries
/// hold the boundary condition h.
struct PottsAssignment {
    std::vector<int> unit;

    int operator[](int vertex) const { return unit[static_cast<std::size_t>(vertex)]; }
    friend bool operator==(const PottsAssignment&, const PottsAssignment&) = default;
};

inline constexpr int max_enumerated_spin_vertices = 25;
inline constexpr std::uint64_t max_enumerated_potts = 10'000'000;

/// All 2^|V| spin assignments extending a boundary condition. Assignment
/// number k gives interior slot s the spin -1 iff bit s of k is set, so the
/// first assignment has every interior spin +1.
class SpinRange {
public:
    /// `boundary` is indexed by vertex id; interior entries are ignored.
    /// Throws Error(resource_limit) when |V| exceeds the enumeration guard.
    SpinRange(const TriangulatedPolygon& polygon, const std::vector<int>& boundary);

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = SpinAssignment;
        using difference_type = std::ptrdiff_t;
        using pointer = const SpinAssignment*;
        using reference = const SpinAssignment&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        friend class SpinRange;
        const SpinRange* range_ = nullptr;
        std::uint64_t index_ = 0;
        SpinAssignment current_;
    };

    iterator begin() const;
    iterator end() const;
    std::uint64_t size() const { return std::uint64_t{1} << interior_.size(); }

private:
    std::vector<int> interior_;
    SpinAssignment first_;
};

/// Potts assignments H: vertices -> unit set of the given size extending a
/// boundary h. With `antiferromagnetic`, only proper colourings (H(A) != H(B)
/// on every edge) are produced; an infeasible boundary yields an empty range.
class PottsRange {
public:
    PottsRange(const TriangulatedPolygon& polygon, int n_units, const std::vector<int>& boundary,
               bool antiferromagnetic);

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = PottsAssignment;
        using difference_type = std::ptrdiff_t;
        using pointer = const PottsAssignment*;
        using reference = const PottsAssignment&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        friend class PottsRange;
        void advance_raw();
        void skip_improper();
        const PottsRange* range_ = nullptr;
        std::uint64_t index_ = 0;
        PottsAssignment current_;
    };

    iterator begin() const;
    iterator end() const;
    /// Number of unconstrained assignments |S|^|V|.
    std::uint64_t raw_size() const { return raw_size_; }
    int n_units() const { return n_units_; }

private:
    bool proper(const PottsAssignment& h) const;

    const TriangulatedPolygon* polygon_;
    int n_units_;
    bool antiferromagnetic_;
    bool feasible_ = true;
    std::uint64_t raw_size_ = 1;
    std::vector<int> interior_;
    PottsAssignment first_;
};

}  // namespace lgt
