#include "lgt/lattice.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "lgt/error.hpp"

namespace lgt {

namespace {

std::string describe(Axial a) {
    return "(" + std::to_string(a.q) + "," + std::to_string(a.r) + ")";
}

std::string describe(const Triangle& t) {
    return describe(t[0]) + " " + describe(t[1]) + " " + describe(t[2]);
}

// Rotates/reflects a unit triangle into positively oriented cyclic order
// starting at its smallest vertex.
std::optional<Triangle> orient(const Triangle& t) {
    const std::array<Triangle, 2> candidates{{{t[0], t[1], t[2]}, {t[0], t[2], t[1]}}};
    for (const auto& c : candidates) {
        if (direction_of(c[0], c[1]) >= 0 && direction_of(c[1], c[2]) >= 0 &&
            direction_of(c[2], c[0]) >= 0) {
            const auto first = std::min_element(c.begin(), c.end()) - c.begin();
            return Triangle{c[static_cast<std::size_t>(first)],
                            c[static_cast<std::size_t>((first + 1) % 3)],
                            c[static_cast<std::size_t>((first + 2) % 3)]};
        }
    }
    return std::nullopt;
}

std::vector<int> boundary_cycle(const std::vector<Edge>& edges,
                                const std::vector<int>& boundary_edges, int n_vertices) {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n_vertices));
    for (int e : boundary_edges) {
        const Edge& edge = edges[static_cast<std::size_t>(e)];
        incident[static_cast<std::size_t>(edge.from)].push_back(e);
        incident[static_cast<std::size_t>(edge.to)].push_back(e);
    }
    for (int v = 0; v < n_vertices; ++v) {
        const auto deg = incident[static_cast<std::size_t>(v)].size();
        if (deg != 0 && deg != 2) {
            fail(ErrorKind::invalid_topology,
                 "pinch point: boundary vertex " + std::to_string(v) + " has " +
                     std::to_string(deg) + " boundary edges");
        }
    }

    int start = -1;
    for (int v = 0; v < n_vertices && start < 0; ++v) {
        if (!incident[static_cast<std::size_t>(v)].empty()) start = v;
    }
    std::vector<int> cycle;
    if (start < 0) return cycle;

    int prev_edge = -1;
    int v = start;
    do {
        cycle.push_back(v);
        const auto& inc = incident[static_cast<std::size_t>(v)];
        const int e = inc[0] != prev_edge ? inc[0] : inc[1];
        const Edge& edge = edges[static_cast<std::size_t>(e)];
        v = edge.from == v ? edge.to : edge.from;
        prev_edge = e;
    } while (v != start && cycle.size() <= boundary_edges.size());

    if (cycle.size() != boundary_edges.size()) {
        fail(ErrorKind::invalid_topology,
             "boundary is not a single cycle (hole or several components): cycle of " +
                 std::to_string(cycle.size()) + " vs " + std::to_string(boundary_edges.size()) +
                 " boundary edges");
    }
    return cycle;
}

}  // namespace

int direction_of(Axial from, Axial to) {
    const Axial step = to - from;
    for (std::size_t k = 0; k < edge_directions.size(); ++k) {
        if (step == edge_directions[k]) return static_cast<int>(k);
    }
    return -1;
}

std::optional<int> TriangulatedPolygon::vertex_at(Axial pos) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), pos,
                                     [](const Vertex& v, Axial p) { return v.pos < p; });
    if (it == vertices_.end() || it->pos != pos) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

std::optional<int> TriangulatedPolygon::edge_between(int a, int b) const {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if ((edge.from == a && edge.to == b) || (edge.from == b && edge.to == a)) {
            return static_cast<int>(e);
        }
    }
    return std::nullopt;
}

int TriangulatedPolygon::euler_characteristic() const {
    return static_cast<int>(vertices_.size()) - static_cast<int>(edges_.size()) +
           static_cast<int>(faces_.size());
}

std::string TriangulatedPolygon::summary() const {
    std::ostringstream os;
    os << "faces=" << faces_.size() << " interior_edges=" << interior_edges_.size()
       << " interior_vertices=" << interior_vertices_.size()
       << " boundary_edges=" << boundary_edges_.size();
    return os.str();
}

TriangulatedPolygon build_triangulated_polygon(std::span<const Triangle> input) {
    if (input.empty()) {
        fail(ErrorKind::invalid_topology, "no faces");
    }

    std::vector<Triangle> tris;
    tris.reserve(input.size());
    for (const auto& t : input) {
        auto o = orient(t);
        if (!o) fail(ErrorKind::invalid_topology, "not a unit lattice triangle: " + describe(t));
        tris.push_back(*o);
    }
    std::sort(tris.begin(), tris.end());
    if (auto dup = std::adjacent_find(tris.begin(), tris.end()); dup != tris.end()) {
        fail(ErrorKind::invalid_topology, "duplicate face: " + describe(*dup));
    }

    TriangulatedPolygon p;

    std::set<Axial> positions;
    for (const auto& t : tris) positions.insert(t.begin(), t.end());
    for (Axial a : positions) p.vertices_.push_back({a, false});

    std::map<std::pair<int, int>, int> edge_index;
    auto edge_id = [&](int from, int to) {
        auto [it, inserted] = edge_index.try_emplace({from, to}, static_cast<int>(p.edges_.size()));
        if (inserted) {
            Edge e;
            e.from = from;
            e.to = to;
            e.direction = direction_of(p.vertices_[static_cast<std::size_t>(from)].pos,
                                       p.vertices_[static_cast<std::size_t>(to)].pos);
            p.edges_.push_back(e);
        }
        return it->second;
    };

    for (const auto& t : tris) {
        Face f;
        for (std::size_t k = 0; k < 3; ++k) f.vertices[k] = *p.vertex_at(t[k]);
        for (std::size_t k = 0; k < 3; ++k) {
            f.edges[k] = edge_id(f.vertices[k], f.vertices[(k + 1) % 3]);
        }
        const int face_id = static_cast<int>(p.faces_.size());
        for (int e : f.edges) {
            Edge& edge = p.edges_[static_cast<std::size_t>(e)];
            // Two distinct unit triangles share an edge from opposite sides, so
            // a third incidence cannot occur.
            (edge.faces[0] < 0 ? edge.faces[0] : edge.faces[1]) = face_id;
        }
        p.faces_.push_back(f);
    }

    // Edge-connectivity of faces.
    {
        std::vector<bool> seen(p.faces_.size(), false);
        std::queue<int> queue;
        queue.push(0);
        seen[0] = true;
        std::size_t visited = 0;
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop();
            ++visited;
            for (int e : p.faces_[static_cast<std::size_t>(f)].edges) {
                for (int g : p.edges_[static_cast<std::size_t>(e)].faces) {
                    if (g >= 0 && !seen[static_cast<std::size_t>(g)]) {
                        seen[static_cast<std::size_t>(g)] = true;
                        queue.push(g);
                    }
                }
            }
        }
        if (visited != p.faces_.size()) {
            fail(ErrorKind::invalid_topology,
                 "faces are not edge-connected (" + std::to_string(visited) + " of " +
                     std::to_string(p.faces_.size()) + " reachable)");
        }
    }

    for (std::size_t e = 0; e < p.edges_.size(); ++e) {
        Edge& edge = p.edges_[e];
        edge.boundary = edge.faces[1] < 0;
        if (edge.boundary) {
            p.boundary_edges_.push_back(static_cast<int>(e));
            p.vertices_[static_cast<std::size_t>(edge.from)].boundary = true;
            p.vertices_[static_cast<std::size_t>(edge.to)].boundary = true;
        }
    }

    p.boundary_cycle_ = boundary_cycle(p.edges_, p.boundary_edges_,
                                       static_cast<int>(p.vertices_.size()));

    if (p.euler_characteristic() != 1) {
        fail(ErrorKind::invalid_topology,
             "Euler characteristic " + std::to_string(p.euler_characteristic()) +
                 " != 1: not a disc");
    }

    p.edge_slot_.assign(p.edges_.size(), -1);
    for (std::size_t e = 0; e < p.edges_.size(); ++e) {
        if (!p.edges_[e].boundary) {
            p.edge_slot_[e] = static_cast<int>(p.interior_edges_.size());
            p.interior_edges_.push_back(static_cast<int>(e));
        }
    }
    p.vertex_slot_.assign(p.vertices_.size(), -1);
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
        if (!p.vertices_[v].boundary) {
            p.vertex_slot_[v] = static_cast<int>(p.interior_vertices_.size());
            p.interior_vertices_.push_back(static_cast<int>(v));
        }
    }

    if (p.interior_edges_.empty() || p.interior_vertices_.empty()) {
        fail(ErrorKind::invalid_topology,
             "complex needs nonboundary edges and vertices (" + p.summary() + ")");
    }
    return p;
}

std::vector<Triangle> hexagon_triangles(int side) {
    if (side < 1) fail(ErrorKind::invalid_argument, "hexagon side must be >= 1");
    auto inside = [side](Axial a) {
        return std::abs(a.q) <= side && std::abs(a.r) <= side && std::abs(a.q - a.r) <= side;
    };
    const Axial d0 = edge_directions[0];
    const Axial d1 = edge_directions[1];
    std::vector<Triangle> out;
    for (int q = -side; q <= side; ++q) {
        for (int r = -side; r <= side; ++r) {
            const Axial a{q, r};
            const Triangle up{a, a + d0, a + d0 + d1};
            const Triangle down{a, a + d0, a - d1};
            for (const auto& t : {up, down}) {
                if (inside(t[0]) && inside(t[1]) && inside(t[2])) out.push_back(t);
            }
        }
    }
    return out;
}

TriangulatedPolygon build_hexagon(int side) {
    const auto tris = hexagon_triangles(side);
    return build_triangulated_polygon(tris);
}

TriangulatedPolygon build_hexagon_example() { return build_hexagon(1); }

HexagonLabels hexagon_labels(const TriangulatedPolygon& polygon, Axial center) {
    const Axial d0 = edge_directions[0];
    const Axial d1 = edge_directions[1];
    const Axial d2 = edge_directions[2];
    const std::array<Axial, 6> offsets{d0, -d1, d2, -d0, d1, -d2};

    HexagonLabels labels;
    const auto o = polygon.vertex_at(center);
    if (!o) fail(ErrorKind::invalid_argument, "no vertex at hexagon center " + describe(center));
    labels.center = *o;
    for (std::size_t n = 0; n < 6; ++n) {
        const auto a = polygon.vertex_at(center + offsets[n]);
        if (!a) fail(ErrorKind::invalid_argument, "hexagon corner missing");
        labels.corners[n] = *a;
        const auto e = polygon.edge_between(labels.center, *a);
        if (!e) fail(ErrorKind::invalid_argument, "hexagon spoke missing");
        labels.spokes[n] = *e;
    }
    return labels;
}

TriangulatedPolygon build_double_hexagon() {
    std::vector<Triangle> tris;
    for (const auto& t : hexagon_triangles(2)) {
        const bool touches = std::any_of(t.begin(), t.end(), [](Axial a) {
            return a == Axial{0, 0} || a == Axial{1, 0};
        });
        if (touches) tris.push_back(t);
    }
    return build_triangulated_polygon(tris);
}

std::optional<TriangulatedPolygon> builtin_polygon(const std::string& name) {
    if (name == "hexagon") return build_hexagon_example();
    if (name == "double-hexagon") return build_double_hexagon();
    if (name == "hexagon2") return build_hexagon(2);
    if (name == "hexagon3") return build_hexagon(3);
    return std::nullopt;
}

std::vector<Triangle> read_domain(std::istream& in) {
    std::vector<Triangle> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> values;
        long v = 0;
        while (ls >> v) values.push_back(v);
        if (!ls.eof()) {
            fail(ErrorKind::invalid_argument,
                 "domain line " + std::to_string(line_no) + ": non-integer token");
        }
        if (values.empty()) continue;
        if (values.size() != 6) {
            fail(ErrorKind::invalid_argument,
                 "domain line " + std::to_string(line_no) + ": expected 6 integers, got " +
                     std::to_string(values.size()));
        }
        Triangle t;
        for (std::size_t k = 0; k < 3; ++k) {
            t[k] = {static_cast<int>(values[2 * k]), static_cast<int>(values[2 * k + 1])};
        }
        out.push_back(t);
    }
    return out;
}

void write_domain(std::ostream& out, std::span<const Triangle> faces) {
    for (const auto& t : faces) {
        out << t[0].q << ' ' << t[0].r << ' ' << t[1].q << ' ' << t[1].r << ' ' << t[2].q << ' '
            << t[2].r << '\n';
    }
}

std::vector<Triangle> triangles_of(const TriangulatedPolygon& polygon) {
    std::vector<Triangle> out;
    out.reserve(polygon.faces().size());
    for (const auto& f : polygon.faces()) {
        Triangle t;
        for (std::size_t k = 0; k < 3; ++k) {
            t[k] = polygon.vertices()[static_cast<std::size_t>(f.vertices[k])].pos;
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace lgt
