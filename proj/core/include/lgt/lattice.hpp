#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgt {

/// Integer axial coordinates. On the triangular lattice a vertex (q, r) sits
/// at q*d0 + r*d1 where d0, d1, d2 = -d0-d1 are the three edge directions at
/// 90, 210 and 330 degrees. On the honeycomb, (q, r) addresses a cell.
struct Axial {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const Axial&, const Axial&) = default;
    friend Axial operator+(Axial a, Axial b) { return {a.q + b.q, a.r + b.r}; }
    friend Axial operator-(Axial a, Axial b) { return {a.q - b.q, a.r - b.r}; }
    friend Axial operator-(Axial a) { return {-a.q, -a.r}; }
};

/// Positive edge directions d0, d1, d2 of the triangular lattice. They sum to
/// zero, so every unit triangle is a directed 3-cycle.
inline constexpr std::array<Axial, 3> edge_directions{{{1, 0}, {0, 1}, {-1, -1}}};

/// Index of the positive direction `to - from`, or -1 if the step is not one.
int direction_of(Axial from, Axial to);

using Triangle = std::array<Axial, 3>;

struct Vertex {
    Axial pos;
    bool boundary = false;
};

/// Oriented edge from -> to along edge_directions[direction].
struct Edge {
    int from = -1;
    int to = -1;
    int direction = -1;
    bool boundary = false;
    std::array<int, 2> faces{-1, -1};
};

/// Face (A, B, C) listed so that AB, BC, CA are all positively oriented;
/// edges[k] is the edge from vertices[k] to vertices[(k+1)%3].
struct Face {
    std::array<int, 3> vertices{};
    std::array<int, 3> edges{};
};

/// A disc made of unit triangles of the triangular lattice. Immutable once
/// built. "Interior" edges/vertices are the nonboundary ones, indexed by
/// dense slots 0..|E|-1 and 0..|V|-1 in increasing id order.
class TriangulatedPolygon {
public:
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    std::span<const int> interior_edges() const { return interior_edges_; }
    std::span<const int> interior_vertices() const { return interior_vertices_; }
    std::span<const int> boundary_edges() const { return boundary_edges_; }
    /// Boundary vertices in cyclic order along the boundary.
    std::span<const int> boundary_vertices() const { return boundary_cycle_; }

    int interior_edge_slot(int edge) const { return edge_slot_[static_cast<std::size_t>(edge)]; }
    int interior_vertex_slot(int vertex) const {
        return vertex_slot_[static_cast<std::size_t>(vertex)];
    }

    std::optional<int> vertex_at(Axial pos) const;
    /// Edge joining vertices a and b, in whichever orientation it has.
    std::optional<int> edge_between(int a, int b) const;

    int euler_characteristic() const;
    std::string summary() const;

    friend TriangulatedPolygon build_triangulated_polygon(std::span<const Triangle> faces);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<int> interior_edges_;
    std::vector<int> interior_vertices_;
    std::vector<int> boundary_edges_;
    std::vector<int> boundary_cycle_;
    std::vector<int> edge_slot_;
    std::vector<int> vertex_slot_;
};

/// Builds and validates a disc complex. Throws Error(invalid_topology) for
/// malformed triangles, duplicates, disconnected input, pinch points, holes,
/// or an empty interior (F, E, V must all be nonempty).
TriangulatedPolygon build_triangulated_polygon(std::span<const Triangle> faces);

/// The hexagon A1..A6 split into 6 triangles around a common vertex O.
TriangulatedPolygon build_hexagon_example();

/// Vertex ids of O and A1..A6 in a polygon containing the example hexagon
/// around `center`. A_n is O + d0, O - d1, O + d2, O - d0, O + d1, O - d2, so
/// the edges O->A1, A2->O, O->A3, A4->O, O->A5, A6->O are positively oriented.
struct HexagonLabels {
    int center = -1;
    std::array<int, 6> corners{};
    /// spoke[n] is the edge joining O and A_{n+1}.
    std::array<int, 6> spokes{};
};
HexagonLabels hexagon_labels(const TriangulatedPolygon& polygon, Axial center = {0, 0});

/// All unit triangles inside the regular hexagon of the given side length.
std::vector<Triangle> hexagon_triangles(int side);
TriangulatedPolygon build_hexagon(int side);

/// Two adjacent vertex stars (the hexagon example around (0,0) and (1,0)):
/// 10 faces, 11 nonboundary edges, 2 nonboundary vertices.
TriangulatedPolygon build_double_hexagon();

/// Domain file: one face per line as six integers "q1 r1 q2 r2 q3 r3".
/// Blank lines and text after '#' are ignored.
std::vector<Triangle> read_domain(std::istream& in);
void write_domain(std::ostream& out, std::span<const Triangle> faces);
std::vector<Triangle> triangles_of(const TriangulatedPolygon& polygon);

/// Built-in complexes by name: "hexagon", "double-hexagon", "hexagon2",
/// "hexagon3".
std::optional<TriangulatedPolygon> builtin_polygon(const std::string& name);

// ---------------------------------------------------------------------------
// Honeycomb domains for the four-colour crossing experiment.

inline constexpr std::array<Axial, 6> cell_directions{
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

/// Regular hexagonal region of honeycomb cells with six marked corners
/// A1..A6. Boundary arc k runs from A_{k+1} to A_{k+2}; a corner cell touches
/// both arcs meeting at it, and a single-cell domain touches all six.
struct HexDomain {
    int side = 0;
    int mesh_divisor = 0;
    double mesh = 0.0;
    int radius = 0;
    std::vector<Axial> cells;
    /// neighbors[c][k] is the cell across direction k, or -1.
    std::vector<std::array<int, 6>> neighbors;
    std::array<std::vector<int>, 6> arcs;
    /// Bit k set if the cell lies on arc k.
    std::vector<std::uint8_t> arc_mask;

    int size() const { return static_cast<int>(cells.size()); }
    std::optional<int> cell_at(Axial pos) const;
};

HexDomain build_hex_domain(int side, int mesh_divisor);

}  // namespace lgt
