#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lgt/estimate.hpp"
#include "lgt/gauge.hpp"
#include "lgt/montecarlo.hpp"
#include "lgt/quadrature.hpp"
#include "lgt/spinmodels.hpp"

namespace lgt {

using MetaValue = std::variant<bool, std::int64_t, double, std::string>;

/// Outcome of one identity check. passed <=> abs_diff <= gate, except for
/// ungated probes (gated = false), which always report passed = true.
struct IdentityReport {
    std::string name;
    Estimate lhs;
    Estimate rhs;
    double abs_diff = 0.0;
    double gate = 0.0;
    bool passed = false;
    bool gated = true;
    std::vector<std::pair<std::string, MetaValue>> meta;

    void set(std::string key, MetaValue value);
    /// Fills abs_diff and passed from lhs, rhs and gate.
    void decide();
};

inline constexpr double exact_gate = 1e-9;
inline constexpr double mc_gate_sigmas = 4.0;

using U1Observable = std::function<double(const U1Point&)>;
using HiggsObservable = std::function<double(const GaugeField&, const HiggsField&)>;

// ---------------------------------------------------------------------------
// Observables

/// Reflection-symmetric U(1) observables: invariant under theta -> pi +- theta
/// on every edge, and of degree <= 2 in each angle.
U1Observable u1_constant(double c);
U1Observable u1_product_cos2();
U1Observable u1_sum_sin2();
U1Observable u1_pair_cos2_sin2();
/// Not symmetric; rejected by check_prop1_u1.
U1Observable u1_cos_first();

/// Coordinate-reflection invariant field observables.
FieldFunction field_constant(double c);
FieldFunction field_product_re2(const TriangulatedPolygon& polygon);
FieldFunction field_sum_coord2(const TriangulatedPolygon& polygon);

/// Gauge-invariant Higgs observables.
HiggsObservable higgs_plaquette_product(const TriangulatedPolygon& polygon);
HiggsObservable higgs_link_re2_sum(const TriangulatedPolygon& polygon);
HiggsObservable higgs_constant(double c);
/// hexagon_fprime of the spoke angles and eta = arg H(O); U(1) only.
HiggsObservable higgs_hexagon_fprime(const TriangulatedPolygon& polygon);

// ---------------------------------------------------------------------------
// Checks

/// First identity of Proposition 1: int f P' = int f P''_beta over U(1)^E,
/// both by tensor quadrature. Throws Error(invalid_observable) if f fails the
/// reflection test on 100 random points.
IdentityReport check_prop1_u1(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                              const U1Observable& f, double beta,
                              const QuadratureOptions& options);

/// Second identity of Proposition 1 for SU(2) with boundary h in {1,i,j,k}:
/// both sides by Haar Monte Carlo on one shared sample stream.
IdentityReport check_prop1_su2(const TriangulatedPolygon& polygon, const HiggsH& h,
                               const FieldFunction& g, double beta,
                               const MonteCarloOptions& options);

/// The S^2 variant: uniform purely imaginary links, antiferromagnetic Potts
/// sum on the right. Throws Error(invalid_argument) if h is not proper on
/// the boundary.
IdentityReport check_prop_s2(const TriangulatedPolygon& polygon, const HiggsH& h,
                             const FieldFunction& f, double beta,
                             const MonteCarloOptions& options);

/// The face-product lemma on random U(AB) = eps(AB) H(A) H(B)* with H in
/// {1,i,j,k}^V: every holonomy must be +-1 and their product +1.
IdentityReport check_lemma_plus(const TriangulatedPolygon& polygon, const HiggsH& h,
                                std::uint64_t trials, std::uint64_t seed);

/// Single-face holonomy h(A)=ab, h(B)=b, h(C)=c for the first octonion basis
/// triple with (ab)c = -a(bc); must equal -1.
IdentityReport check_octonion_counterexample();

/// Proposition 1 with octonion links and S = {e_1..e_8}. Reported as data,
/// never gated.
IdentityReport probe_octonion_prop1(const TriangulatedPolygon& polygon, const HiggsH& h,
                                    double beta, const MonteCarloOptions& options);

/// E f under LinearizedHiggs with H in the unit set S (enumerated) against H
/// Haar-distributed on G, on independent sample streams. lambda = +infinity
/// selects the (0, infinity) density. Throws Error(invalid_observable) if f
/// changes under one of 100 random gauge transformations.
IdentityReport check_prop_lS(const TriangulatedPolygon& polygon, const HiggsH& h,
                             const HiggsObservable& f, double beta, double lambda,
                             const MonteCarloOptions& options);

/// First isomorphism: each spin assignment has marginal mass 2^-|V| under
/// the random-medium Ising density, and the U-marginal is P''_inf.
IdentityReport check_iso1(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                          const QuadratureOptions& options);

/// Second isomorphism: P'_{0,inf,{1,i}}(U,H) = P(U,H^2) on random inputs.
IdentityReport check_iso2(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                          std::uint64_t trials, std::uint64_t seed);

/// Third isomorphism: the masses of all H in {1,i,j,k}^V under
/// P'_{0,inf} over SU(2) agree (shared stream, paired differences).
IdentityReport check_iso3(const TriangulatedPolygon& polygon, const HiggsH& h,
                          const MonteCarloOptions& options);

/// Corollary: E of the conditional observable under
/// LinearizedGaugeTheory(U(1), inf) equals the Percolation expectation of f.
IdentityReport check_corollary(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                               const SpinFunction& f, const QuadratureOptions& options);

/// The conditional observable has strictly smaller variance than f o p2
/// (f non-constant). lhs is the conditional variance, rhs the direct one.
IdentityReport check_variance_strictness(const TriangulatedPolygon& polygon,
                                         const SqrtSigma& sigma, const SpinFunction& f,
                                         const QuadratureOptions& options);

}  // namespace lgt
