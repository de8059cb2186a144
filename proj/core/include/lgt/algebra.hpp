#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "lgt/rng.hpp"

namespace lgt {

/// The three normed division algebras used for link variables. The enum
/// value is the number of real coordinates.
enum class AlgebraKind : std::uint8_t {
    complex = 2,
    quaternion = 4,
    octonion = 8,
};

constexpr int dimension(AlgebraKind kind) { return static_cast<int>(kind); }
std::string_view to_string(AlgebraKind kind);
std::optional<AlgebraKind> parse_algebra_kind(std::string_view name);

/// Element of C, H or O stored as real coordinates; coordinate 0 is the real
/// part. Basis element e_{k+1} of the algebra is the k-th coordinate vector,
/// so e_1 = 1, and for quaternions (e_2, e_3, e_4) = (i, j, k).
class AlgebraElement {
public:
    static constexpr int max_dimension = 8;

    AlgebraElement() = default;
    explicit AlgebraElement(AlgebraKind kind) : kind_(kind) {}
    AlgebraElement(AlgebraKind kind, std::span<const double> coords);

    static AlgebraElement one(AlgebraKind kind);
    static AlgebraElement basis(AlgebraKind kind, int index);
    static AlgebraElement from_angle(double theta);

    AlgebraKind kind() const { return kind_; }
    int dimension() const { return lgt::dimension(kind_); }

    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    std::span<const double> coords() const {
        return {c_.data(), static_cast<std::size_t>(dimension())};
    }

    double re() const { return c_[0]; }
    double norm_squared() const;
    double norm() const;
    AlgebraElement conj() const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator*(double s, const AlgebraElement& x);

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

private:
    AlgebraKind kind_ = AlgebraKind::complex;
    std::array<double, max_dimension> c_{};
};

/// Algebra product. Quaternions use Hamilton's table; octonions are the
/// Cayley-Dickson double of H with (a,b)(c,d) = (ac - d*b, da + bc*).
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y);
}

inline AlgebraElement conj(const AlgebraElement& x) { return x.conj(); }
inline double re(const AlgebraElement& x) { return x.re(); }
inline double norm(const AlgebraElement& x) { return x.norm(); }

/// |Re((xy)z) - Re(x(yz))|. Zero up to roundoff in every normed division
/// algebra, including the non-associative octonions.
double re_assoc_defect(const AlgebraElement& x, const AlgebraElement& y,
                       const AlgebraElement& z);

/// For signed basis units a, b, c: +1 if (ab)c = a(bc), -1 if (ab)c = -a(bc).
int associator_sign(const AlgebraElement& a, const AlgebraElement& b,
                    const AlgebraElement& c);

/// If `x` is a signed basis unit +-e_{k+1}, returns (k, sign).
std::optional<std::pair<int, int>> as_signed_basis(const AlgebraElement& x);

/// Haar (uniform) sampler on the unit sphere of an algebra, and on the
/// purely imaginary unit quaternions S^2. Normalizes a standard Gaussian
/// vector.
class SphereSampler {
public:
    AlgebraElement unit(AlgebraKind kind, Rng& rng);
    AlgebraElement imaginary_unit(Rng& rng);

private:
    std::normal_distribution<double> normal_;
};

AlgebraElement haar_sample(AlgebraKind kind, Rng& rng);

/// The basis units {1,i}, {1,i,j,k} or {e_1..e_8}. Elements are addressed by
/// index; index 0 is always 1.
class UnitSet {
public:
    explicit UnitSet(AlgebraKind kind) : kind_(kind) {}

    AlgebraKind kind() const { return kind_; }
    int size() const { return lgt::dimension(kind_); }
    AlgebraElement element(int index) const { return AlgebraElement::basis(kind_, index); }
    std::optional<int> index_of(const AlgebraElement& x) const;

private:
    AlgebraKind kind_;
};

inline constexpr double unit_tolerance = 1e-12;
inline constexpr double identity_tolerance = 1e-10;

}  // namespace lgt
