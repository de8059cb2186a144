#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lgt/assignments.hpp"
#include "lgt/estimate.hpp"
#include "lgt/gauge.hpp"
#include "lgt/quadrature.hpp"

namespace lgt {

using SpinFunction = std::function<double(const SpinAssignment&)>;

/// The random-medium Ising weight P(U, Sigma) (un-normalized).
inline double random_medium_ising_density(const TriangulatedPolygon& polygon, const GaugeField& U,
                                          const SpinAssignment& spins) {
    return weight_spin(polygon, U, spins);
}

/// E(f o p2 | p1)(U) = sum_Sigma f(Sigma) P(U,Sigma) / sum_Sigma P(U,Sigma).
/// Throws Error(degenerate_configuration) if the denominator vanishes.
double conditional_observable(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                              const SpinFunction& f, const GaugeField& U);

/// The same ratio evaluated on angles through a U1Model, with f tabulated
/// once per spin state.
class ConditionalObservable {
public:
    ConditionalObservable(const U1Model& model, const SpinFunction& f);

    double numerator(const U1Point& p) const;
    /// Throws Error(degenerate_configuration) where spin_sum(p) = 0.
    double operator()(const U1Point& p) const;
    double value_of_state(std::size_t state) const { return values_[state]; }

private:
    const U1Model* model_;
    std::vector<double> values_;
};

/// Uniform average of f over all spin assignments extending sigma
/// (the Percolation expectation).
Estimate percolation_expectation(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                                 const SpinFunction& f);

/// Z''_inf: integral over U(1)^E of sum_Sigma P(U, Sigma).
Estimate z_infinity(const U1Model& model, const QuadratureOptions& options);

/// E of the conditional observable under LinearizedGaugeTheory(U(1), inf):
/// int num(U) dU / Z''_inf. Both integrands are trigonometric polynomials, so
/// M >= 5 is exact.
Estimate conditional_expectation(const U1Model& model, const SpinFunction& f,
                                 const QuadratureOptions& options);

struct VarianceComparison {
    /// Variance of E(f o p2 | p1) under LinearizedGaugeTheory(U(1), inf),
    /// by quadrature at the finest grid.
    double conditional = 0.0;
    /// The same at the next coarser grid (the M-doubling convergence check).
    double conditional_coarse = 0.0;
    /// Variance of f o p2 on the coupled space (= its Percolation variance).
    double direct = 0.0;
    int grid = 0;
};

/// The conditional observable is not a trigonometric polynomial, so its
/// second moment is computed at grids M and 2M. M must be even.
VarianceComparison compare_variances(const U1Model& model, const SpinFunction& f,
                                     const QuadratureOptions& options);

/// Union-find over vertices with spin +1 (boundary included); true iff some
/// +1 vertex of `arc_a` shares a cluster with some +1 vertex of `arc_b`.
bool crossing_event(const TriangulatedPolygon& polygon, const SpinAssignment& spins,
                    std::span<const int> arc_a, std::span<const int> arc_b);

/// Crossing between the boundary arcs A6A1 and A3A4 of the example hexagon.
/// With the example boundary this happens iff Sigma(O) = +1.
int crossing_indicator_hexagon(const TriangulatedPolygon& polygon, const SpinAssignment& spins);

/// The ratio of the two spin weights of the example hexagon,
/// T+ / (T+ + T-), where T+ = cos^2 t1 sin^2 t2 cos^2 t3 cos^2 t4 sin^2 t5 cos^2 t6
/// and T- swaps every cos and sin. theta[n] is the angle of spoke n+1.
/// Throws Error(degenerate_configuration) when both terms vanish.
double hexagon_f(std::span<const double> theta);

/// The Higgs lift f'(theta, e^{i eta}) = f after the gauge transformation
/// g(O) = e^{-i eta} that maps H(O) to 1: spokes leaving O shift by -eta and
/// spokes entering O by +eta.
double hexagon_fprime(std::span<const double> theta, double eta);

}  // namespace lgt
