#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lgt/assignments.hpp"
#include "lgt/estimate.hpp"
#include "lgt/gauge.hpp"

namespace lgt {

/// A U(1) configuration on the nonboundary edges, by interior slot:
/// theta[s] and its cosine and sine.
struct U1Point {
    std::span<const double> theta;
    std::span<const double> cos;
    std::span<const double> sin;
};

/// Owning storage for a U1Point.
class U1Angles {
public:
    explicit U1Angles(std::span<const double> theta);
    U1Point point() const { return {theta_, cos_, sin_}; }

private:
    std::vector<double> theta_, cos_, sin_;
};

using U1Integrand = std::function<double(const U1Point&)>;
using U1MultiIntegrand = std::function<void(const U1Point&, std::span<double> out)>;

enum class Measure {
    lebesgue,  ///< d theta on [0, 2 pi)^|E|
    haar,      ///< normalized: Lebesgue / (2 pi)^|E|
};

struct QuadratureOptions {
    int grid = 5;
    int workers = 1;
    std::uint64_t max_points = 100'000'000;
    Measure measure = Measure::lebesgue;
};

/// Uniform tensor grid theta_s in {2 pi m / M}: returns (2 pi / M)^|E| times
/// the grid sum (or the grid mean for the Haar measure). Exact for
/// trigonometric polynomials of degree < M in each angle separately.
/// Throws Error(resource_limit) above options.max_points grid points.
Estimate integrate_u1(const U1Integrand& integrand, std::size_t n_edges,
                      const QuadratureOptions& options);

/// Several integrands over one pass of the grid.
std::vector<Estimate> integrate_u1_multi(const U1MultiIntegrand& integrand, std::size_t n_outputs,
                                         std::size_t n_edges, const QuadratureOptions& options);

/// Evaluates the U(1) weights of one polygon and boundary directly from
/// angles, without building a GaugeField. Mirrors the generic weights in
/// gauge.hpp, which serve as its test oracle.
class U1Model {
public:
    U1Model(const TriangulatedPolygon& polygon, const SqrtSigma& sigma);

    const TriangulatedPolygon& polygon() const { return *polygon_; }
    const SqrtSigma& sigma() const { return sigma_; }
    std::size_t n_edges() const { return polygon_->interior_edges().size(); }
    std::size_t n_faces() const { return faces_.size(); }
    std::size_t n_spin_states() const { return spin_masks_.size(); }

    double holonomy_re(const U1Point& p, std::size_t face) const;
    double weight_exp(const U1Point& p, double beta) const;
    double weight_prelinearized(const U1Point& p, double beta) const;
    /// Spin weight of enumeration state k (the k-th assignment of SpinRange).
    double weight_spin(const U1Point& p, std::size_t state) const;
    double spin_sum(const U1Point& p) const;
    double weight_linearized(const U1Point& p, double beta) const;

    const SpinAssignment& spin_state(std::size_t state) const { return states_[state]; }

    GaugeField field(const U1Point& p) const;

private:
    struct FaceTerm {
        std::complex<double> boundary;
        std::array<int, 3> slots;
        int n_slots;
    };

    const TriangulatedPolygon* polygon_;
    SqrtSigma sigma_;
    std::vector<FaceTerm> faces_;
    /// Bit s set if the two ends of interior edge s carry equal spins.
    std::vector<std::uint64_t> spin_masks_;
    std::vector<SpinAssignment> states_;
};

}  // namespace lgt
