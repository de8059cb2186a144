#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lgt/algebra.hpp"
#include "lgt/assignments.hpp"
#include "lgt/lattice.hpp"

namespace lgt {

// ---------------------------------------------------------------------------
// Boundary conditions

/// Explicit unit value u(AB) for each boundary edge, indexed by edge id
/// (entries for nonboundary edges are ignored).
struct ExplicitU {
    std::vector<AlgebraElement> u;
};

/// Boundary spins sigma(A) = +-1, indexed by vertex id. Induces the U(1)
/// boundary u(AB) = 1 if sigma(A) = sigma(B), and i*sigma(B) otherwise.
struct SqrtSigma {
    std::vector<int> sigma;
};

/// Boundary Higgs values h(A) in the unit set of `kind` (as unit indices),
/// indexed by vertex id. Induces u(AB) = h(A) h(B)*.
struct HiggsH {
    AlgebraKind kind = AlgebraKind::complex;
    std::vector<int> h;
};

using BoundaryCondition = std::variant<ExplicitU, SqrtSigma, HiggsH>;

AlgebraKind kind_of(const BoundaryCondition& bc);

/// u(AB) for a boundary edge.
AlgebraElement induced_link(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                            int edge);

/// h = sqrt(sigma): 1 where sigma = +1 and i where sigma = -1. Induces the
/// same boundary links as the SqrtSigma condition itself.
HiggsH sqrt_of(const SqrtSigma& sigma);

/// Makes a SqrtSigma/HiggsH condition from values listed for the boundary
/// vertices in polygon.boundary_vertices() order.
SqrtSigma sigma_from_cycle(const TriangulatedPolygon& polygon, std::span<const int> values);
HiggsH higgs_from_cycle(const TriangulatedPolygon& polygon, AlgebraKind kind,
                        std::span<const int> units);

/// The boundary of the worked hexagon example: sigma(A_n) = +1 for
/// n = 1, 3, 4, 6 and -1 for n = 2, 5.
SqrtSigma hexagon_example_sigma(const TriangulatedPolygon& polygon);
/// h(A_n) = 1 for n = 1, 3, 4, 6 and i for n = 2, 5.
HiggsH hexagon_example_h(const TriangulatedPolygon& polygon);

// ---------------------------------------------------------------------------
// Fields

/// Link variables on every edge (indexed by edge id). Boundary links are set
/// from the boundary condition at construction and never change; nonboundary
/// links start at 1.
class GaugeField {
public:
    GaugeField(const TriangulatedPolygon& polygon, const BoundaryCondition& bc);

    /// U(1) field with U(e) = exp(i theta[slot]) on nonboundary edges.
    static GaugeField from_angles(const TriangulatedPolygon& polygon,
                                  const BoundaryCondition& bc, std::span<const double> theta);

    AlgebraKind kind() const { return kind_; }
    std::size_t size() const { return links_.size(); }
    const AlgebraElement& operator[](int edge) const {
        return links_[static_cast<std::size_t>(edge)];
    }
    std::span<const AlgebraElement> links() const { return links_; }

    /// Sets the link of a nonboundary edge, addressed by its interior slot.
    void set_interior(const TriangulatedPolygon& polygon, int slot, const AlgebraElement& value);

private:
    AlgebraKind kind_;
    std::vector<AlgebraElement> links_;
};

/// Higgs values per vertex id.
using HiggsField = std::vector<AlgebraElement>;

/// Higgs field with boundary h and the interior given by unit indices (the
/// entries of `potts` at boundary vertices must agree with h).
HiggsField higgs_from_potts(const HiggsH& h, const PottsAssignment& potts);
/// Higgs field with boundary h and interior values per interior slot.
HiggsField higgs_from_interior(const TriangulatedPolygon& polygon, const HiggsH& h,
                               std::span<const AlgebraElement> interior);

// ---------------------------------------------------------------------------
// Weights. None of these are normalized.

/// Left-to-right product U(AB) U(BC) U(CA).
AlgebraElement face_holonomy(const TriangulatedPolygon& polygon, const GaugeField& U, int face);
double face_holonomy_re(const TriangulatedPolygon& polygon, const GaugeField& U, int face);

/// Sum over faces of Re(holonomy).
double plaquette_action(const TriangulatedPolygon& polygon, const GaugeField& U);

/// exp(beta * sum_F Re hol).
double weight_exp(const TriangulatedPolygon& polygon, const GaugeField& U, double beta);

/// prod_F (1 + beta * Re hol).
double weight_prelinearized(const TriangulatedPolygon& polygon, const GaugeField& U, double beta);

/// Random-medium Ising weight prod_{AB in E} cos^2 or sin^2 of theta(AB),
/// cos^2 where Sigma(A) = Sigma(B). U must be U(1)-valued.
double weight_spin(const TriangulatedPolygon& polygon, const GaugeField& U,
                   const SpinAssignment& spins);

/// 1 + beta^|F| sum_Sigma weight_spin(U, Sigma); beta = +infinity drops the
/// constant and the power and returns the bare spin sum.
double weight_linearized_u1(const TriangulatedPolygon& polygon, const GaugeField& U,
                            const SqrtSigma& sigma, double beta);

/// Re(H(A)* U(AB) H(B)), associated left to right.
double link_coupling_re(const TriangulatedPolygon& polygon, const GaugeField& U,
                        const HiggsField& H, int edge);

/// prod_{AB in E} Re^2(H(A)* U(AB) H(B)).
double weight_unit_higgs(const TriangulatedPolygon& polygon, const GaugeField& U,
                         const HiggsField& H);

/// 1 + beta^|F| sum_{H in S^V} weight_unit_higgs(U, H) for the unit set S of
/// h.kind; beta = +infinity gives the bare sum.
double weight_linearized(const TriangulatedPolygon& polygon, const GaugeField& U,
                         const HiggsH& h, double beta);

/// As weight_linearized with S = {1,i,j,k}, but summing only over
/// antiferromagnetic H (H(A) != H(B) on every edge). The variant for S^2 links.
double weight_linearized_s2(const TriangulatedPolygon& polygon, const GaugeField& U,
                            const HiggsH& h, double beta);

/// exp(beta sum_F Re hol + lambda sum_E Re(H(A)* U(AB) H(B))).
double weight_higgs(const TriangulatedPolygon& polygon, const GaugeField& U, const HiggsField& H,
                    double beta, double lambda);

/// prod_F (1 + beta Re hol) * prod_E (1 + lambda/2 Re(H(A)* U H(B)))^2.
/// lambda = +infinity selects the (0, infinity) limit, which ignores beta and
/// returns weight_unit_higgs(U, H).
double weight_linearized_higgs(const TriangulatedPolygon& polygon, const GaugeField& U,
                               const HiggsField& H, double beta, double lambda);

// ---------------------------------------------------------------------------
// Gauge transformations. Only defined for groups (U(1) and SU(2)); `g` gives
// one element per interior vertex slot and is extended by 1 on the boundary.

GaugeField gauge_transform(const TriangulatedPolygon& polygon, const GaugeField& U,
                           std::span<const AlgebraElement> g);

std::pair<GaugeField, HiggsField> gauge_transform_higgs(const TriangulatedPolygon& polygon,
                                                        const GaugeField& U, const HiggsField& H,
                                                        std::span<const AlgebraElement> g);

}  // namespace lgt
