#include "lgt/gauge.hpp"

#include <cmath>
#include <string>

#include "lgt/error.hpp"

namespace lgt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_vertex_indexed(const TriangulatedPolygon& polygon, std::size_t size,
                            const char* what) {
    if (size != polygon.vertices().size()) {
        fail(ErrorKind::invalid_argument, std::string(what) + " must be indexed by vertex id");
    }
}

void validate(const TriangulatedPolygon& polygon, const BoundaryCondition& bc) {
    std::visit(overloaded{
                   [&](const ExplicitU& b) {
                       if (b.u.size() != polygon.edges().size()) {
                           fail(ErrorKind::invalid_argument,
                                "explicit boundary must be indexed by edge id");
                       }
                       const AlgebraKind kind = kind_of(bc);
                       for (int e : polygon.boundary_edges()) {
                           const auto& u = b.u[static_cast<std::size_t>(e)];
                           if (u.kind() != kind) {
                               fail(ErrorKind::invalid_argument, "mixed kinds in explicit boundary");
                           }
                           if (std::abs(u.norm() - 1.0) > unit_tolerance) {
                               fail(ErrorKind::invalid_argument, "boundary link is not a unit");
                           }
                       }
                   },
                   [&](const SqrtSigma& b) {
                       require_vertex_indexed(polygon, b.sigma.size(), "sigma");
                       for (int v : polygon.boundary_vertices()) {
                           const int s = b.sigma[static_cast<std::size_t>(v)];
                           if (s != 1 && s != -1) {
                               fail(ErrorKind::invalid_argument, "sigma must be +1 or -1");
                           }
                       }
                   },
                   [&](const HiggsH& b) {
                       require_vertex_indexed(polygon, b.h.size(), "h");
                       for (int v : polygon.boundary_vertices()) {
                           const int u = b.h[static_cast<std::size_t>(v)];
                           if (u < 0 || u >= dimension(b.kind)) {
                               fail(ErrorKind::invalid_argument, "h is not a unit-set index");
                           }
                       }
                   },
               },
               bc);
}

double pow_faces(double beta, std::size_t n_faces) {
    return std::pow(beta, static_cast<double>(n_faces));
}

void require_group(AlgebraKind kind) {
    if (kind == AlgebraKind::octonion) {
        fail(ErrorKind::unsupported_operation,
             "gauge transformations need a group; unit octonions are not one");
    }
}

}  // namespace

AlgebraKind kind_of(const BoundaryCondition& bc) {
    return std::visit(overloaded{
                          [](const ExplicitU& b) {
                              for (const auto& u : b.u) {
                                  if (u.norm_squared() > 0.0) return u.kind();
                              }
                              return AlgebraKind::complex;
                          },
                          [](const SqrtSigma&) { return AlgebraKind::complex; },
                          [](const HiggsH& b) { return b.kind; },
                      },
                      bc);
}

AlgebraElement induced_link(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                            int edge) {
    const Edge& e = polygon.edges()[static_cast<std::size_t>(edge)];
    return std::visit(
        overloaded{
            [&](const ExplicitU& b) { return b.u[static_cast<std::size_t>(edge)]; },
            [&](const SqrtSigma& b) {
                const int sa = b.sigma[static_cast<std::size_t>(e.from)];
                const int sb = b.sigma[static_cast<std::size_t>(e.to)];
                if (sa == sb) return AlgebraElement::one(AlgebraKind::complex);
                return static_cast<double>(sb) * AlgebraElement::basis(AlgebraKind::complex, 1);
            },
            [&](const HiggsH& b) {
                const auto ha = AlgebraElement::basis(b.kind, b.h[static_cast<std::size_t>(e.from)]);
                const auto hb = AlgebraElement::basis(b.kind, b.h[static_cast<std::size_t>(e.to)]);
                return mul(ha, hb.conj());
            },
        },
        bc);
}

HiggsH sqrt_of(const SqrtSigma& sigma) {
    HiggsH h;
    h.kind = AlgebraKind::complex;
    h.h.resize(sigma.sigma.size());
    for (std::size_t v = 0; v < sigma.sigma.size(); ++v) h.h[v] = sigma.sigma[v] == -1 ? 1 : 0;
    return h;
}

SqrtSigma sigma_from_cycle(const TriangulatedPolygon& polygon, std::span<const int> values) {
    const auto cycle = polygon.boundary_vertices();
    if (values.size() != cycle.size()) {
        fail(ErrorKind::invalid_argument, "expected one boundary value per boundary vertex");
    }
    SqrtSigma s;
    s.sigma.assign(polygon.vertices().size(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        s.sigma[static_cast<std::size_t>(cycle[k])] = values[k];
    }
    validate(polygon, s);
    return s;
}

HiggsH higgs_from_cycle(const TriangulatedPolygon& polygon, AlgebraKind kind,
                        std::span<const int> units) {
    const auto cycle = polygon.boundary_vertices();
    if (units.size() != cycle.size()) {
        fail(ErrorKind::invalid_argument, "expected one boundary value per boundary vertex");
    }
    HiggsH h;
    h.kind = kind;
    h.h.assign(polygon.vertices().size(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        h.h[static_cast<std::size_t>(cycle[k])] = units[k];
    }
    validate(polygon, h);
    return h;
}

SqrtSigma hexagon_example_sigma(const TriangulatedPolygon& polygon) {
    const auto labels = hexagon_labels(polygon);
    SqrtSigma s;
    s.sigma.assign(polygon.vertices().size(), 1);
    s.sigma[static_cast<std::size_t>(labels.corners[1])] = -1;
    s.sigma[static_cast<std::size_t>(labels.corners[4])] = -1;
    return s;
}

HiggsH hexagon_example_h(const TriangulatedPolygon& polygon) {
    return sqrt_of(hexagon_example_sigma(polygon));
}

GaugeField::GaugeField(const TriangulatedPolygon& polygon, const BoundaryCondition& bc)
    : kind_(kind_of(bc)) {
    validate(polygon, bc);
    links_.assign(polygon.edges().size(), AlgebraElement::one(kind_));
    for (int e : polygon.boundary_edges()) {
        links_[static_cast<std::size_t>(e)] = induced_link(polygon, bc, e);
    }
}

GaugeField GaugeField::from_angles(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                                   std::span<const double> theta) {
    GaugeField U(polygon, bc);
    if (U.kind() != AlgebraKind::complex) {
        fail(ErrorKind::invalid_argument, "angle fields need a U(1) boundary");
    }
    if (theta.size() != polygon.interior_edges().size()) {
        fail(ErrorKind::invalid_argument, "expected one angle per nonboundary edge");
    }
    for (std::size_t s = 0; s < theta.size(); ++s) {
        U.links_[static_cast<std::size_t>(polygon.interior_edges()[s])] =
            AlgebraElement::from_angle(theta[s]);
    }
    return U;
}

void GaugeField::set_interior(const TriangulatedPolygon& polygon, int slot,
                              const AlgebraElement& value) {
    if (value.kind() != kind_) fail(ErrorKind::invalid_argument, "link kind mismatch");
    links_[static_cast<std::size_t>(polygon.interior_edges()[static_cast<std::size_t>(slot)])] = value;
}

HiggsField higgs_from_potts(const HiggsH& h, const PottsAssignment& potts) {
    if (potts.unit.size() != h.h.size()) {
        fail(ErrorKind::invalid_argument, "Potts assignment size mismatch");
    }
    HiggsField H;
    H.reserve(potts.unit.size());
    for (int u : potts.unit) H.push_back(AlgebraElement::basis(h.kind, u));
    return H;
}

HiggsField higgs_from_interior(const TriangulatedPolygon& polygon, const HiggsH& h,
                               std::span<const AlgebraElement> interior) {
    if (interior.size() != polygon.interior_vertices().size()) {
        fail(ErrorKind::invalid_argument, "expected one Higgs value per nonboundary vertex");
    }
    HiggsField H;
    H.reserve(polygon.vertices().size());
    for (std::size_t v = 0; v < polygon.vertices().size(); ++v) {
        const int slot = polygon.interior_vertex_slot(static_cast<int>(v));
        H.push_back(slot < 0 ? AlgebraElement::basis(h.kind, h.h[v])
                             : interior[static_cast<std::size_t>(slot)]);
    }
    return H;
}

AlgebraElement face_holonomy(const TriangulatedPolygon& polygon, const GaugeField& U, int face) {
    const Face& f = polygon.faces()[static_cast<std::size_t>(face)];
    return mul(mul(U[f.edges[0]], U[f.edges[1]]), U[f.edges[2]]);
}

double face_holonomy_re(const TriangulatedPolygon& polygon, const GaugeField& U, int face) {
    return face_holonomy(polygon, U, face).re();
}

double plaquette_action(const TriangulatedPolygon& polygon, const GaugeField& U) {
    double s = 0.0;
    for (std::size_t f = 0; f < polygon.faces().size(); ++f) {
        s += face_holonomy_re(polygon, U, static_cast<int>(f));
    }
    return s;
}

double weight_exp(const TriangulatedPolygon& polygon, const GaugeField& U, double beta) {
    return std::exp(beta * plaquette_action(polygon, U));
}

double weight_prelinearized(const TriangulatedPolygon& polygon, const GaugeField& U, double beta) {
    double w = 1.0;
    for (std::size_t f = 0; f < polygon.faces().size(); ++f) {
        w *= 1.0 + beta * face_holonomy_re(polygon, U, static_cast<int>(f));
    }
    return w;
}

double weight_spin(const TriangulatedPolygon& polygon, const GaugeField& U,
                   const SpinAssignment& spins) {
    if (U.kind() != AlgebraKind::complex) {
        fail(ErrorKind::invalid_argument, "random-medium Ising weight needs a U(1) field");
    }
    double w = 1.0;
    for (int e : polygon.interior_edges()) {
        const Edge& edge = polygon.edges()[static_cast<std::size_t>(e)];
        const AlgebraElement& u = U[e];
        w *= spins[edge.from] == spins[edge.to] ? u[0] * u[0] : u[1] * u[1];
    }
    return w;
}

double weight_linearized_u1(const TriangulatedPolygon& polygon, const GaugeField& U,
                            const SqrtSigma& sigma, double beta) {
    double sum = 0.0;
    for (const auto& spins : SpinRange(polygon, sigma.sigma)) {
        sum += weight_spin(polygon, U, spins);
    }
    if (std::isinf(beta) && beta > 0) return sum;
    return 1.0 + pow_faces(beta, polygon.faces().size()) * sum;
}

double link_coupling_re(const TriangulatedPolygon& polygon, const GaugeField& U,
                        const HiggsField& H, int edge) {
    const Edge& e = polygon.edges()[static_cast<std::size_t>(edge)];
    return mul(mul(H[static_cast<std::size_t>(e.from)].conj(), U[edge]),
               H[static_cast<std::size_t>(e.to)])
        .re();
}

double weight_unit_higgs(const TriangulatedPolygon& polygon, const GaugeField& U,
                         const HiggsField& H) {
    double w = 1.0;
    for (int e : polygon.interior_edges()) {
        const double c = link_coupling_re(polygon, U, H, e);
        w *= c * c;
    }
    return w;
}

namespace {

double linearized_sum(const TriangulatedPolygon& polygon, const GaugeField& U, const HiggsH& h,
                      bool antiferromagnetic) {
    if (U.kind() != h.kind) fail(ErrorKind::invalid_argument, "field and h kinds differ");
    double sum = 0.0;
    for (const auto& potts : PottsRange(polygon, dimension(h.kind), h.h, antiferromagnetic)) {
        sum += weight_unit_higgs(polygon, U, higgs_from_potts(h, potts));
    }
    return sum;
}

}  // namespace

double weight_linearized(const TriangulatedPolygon& polygon, const GaugeField& U,
                         const HiggsH& h, double beta) {
    const double sum = linearized_sum(polygon, U, h, false);
    if (std::isinf(beta) && beta > 0) return sum;
    return 1.0 + pow_faces(beta, polygon.faces().size()) * sum;
}

double weight_linearized_s2(const TriangulatedPolygon& polygon, const GaugeField& U,
                            const HiggsH& h, double beta) {
    if (h.kind != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "the S^2 variant uses quaternion units");
    }
    const double sum = linearized_sum(polygon, U, h, true);
    if (std::isinf(beta) && beta > 0) return sum;
    return 1.0 + pow_faces(beta, polygon.faces().size()) * sum;
}

double weight_higgs(const TriangulatedPolygon& polygon, const GaugeField& U, const HiggsField& H,
                    double beta, double lambda) {
    double link = 0.0;
    for (int e : polygon.interior_edges()) link += link_coupling_re(polygon, U, H, e);
    return std::exp(beta * plaquette_action(polygon, U) + lambda * link);
}

double weight_linearized_higgs(const TriangulatedPolygon& polygon, const GaugeField& U,
                               const HiggsField& H, double beta, double lambda) {
    if (std::isinf(lambda) && lambda > 0) return weight_unit_higgs(polygon, U, H);
    double w = weight_prelinearized(polygon, U, beta);
    for (int e : polygon.interior_edges()) {
        const double t = 1.0 + 0.5 * lambda * link_coupling_re(polygon, U, H, e);
        w *= t * t;
    }
    return w;
}

GaugeField gauge_transform(const TriangulatedPolygon& polygon, const GaugeField& U,
                           std::span<const AlgebraElement> g) {
    require_group(U.kind());
    if (g.size() != polygon.interior_vertices().size()) {
        fail(ErrorKind::invalid_argument, "expected one gauge element per nonboundary vertex");
    }
    auto at = [&](int v) {
        const int slot = polygon.interior_vertex_slot(v);
        return slot < 0 ? AlgebraElement::one(U.kind()) : g[static_cast<std::size_t>(slot)];
    };
    GaugeField out = U;
    for (int e : polygon.interior_edges()) {
        const Edge& edge = polygon.edges()[static_cast<std::size_t>(e)];
        out.set_interior(polygon, polygon.interior_edge_slot(e),
                         mul(mul(at(edge.from), U[e]), at(edge.to).conj()));
    }
    return out;
}

std::pair<GaugeField, HiggsField> gauge_transform_higgs(const TriangulatedPolygon& polygon,
                                                        const GaugeField& U, const HiggsField& H,
                                                        std::span<const AlgebraElement> g) {
    GaugeField out = gauge_transform(polygon, U, g);
    HiggsField H2 = H;
    for (std::size_t s = 0; s < g.size(); ++s) {
        const auto v = static_cast<std::size_t>(polygon.interior_vertices()[s]);
        H2[v] = mul(g[s], H[v]);
    }
    return {std::move(out), std::move(H2)};
}

}  // namespace lgt
