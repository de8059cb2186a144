#include "lgt/algebra.hpp"

#include <cmath>
#include <string>

#include "lgt/error.hpp"

namespace lgt {

namespace {

using Quat = std::array<double, 4>;

Quat hamilton(const Quat& a, const Quat& b) {
    return {
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    };
}

Quat quat_conj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

void require_same_kind(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.kind() != y.kind()) {
        fail(ErrorKind::invalid_argument,
             "algebra kind mismatch: " + std::string(to_string(x.kind())) + " vs " +
                 std::string(to_string(y.kind())));
    }
}

}  // namespace

std::string_view to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::complex: return "complex";
        case AlgebraKind::quaternion: return "quaternion";
        case AlgebraKind::octonion: return "octonion";
    }
    return "unknown";
}

std::optional<AlgebraKind> parse_algebra_kind(std::string_view name) {
    if (name == "complex" || name == "u1" || name == "U1") return AlgebraKind::complex;
    if (name == "quaternion" || name == "su2" || name == "SU2") return AlgebraKind::quaternion;
    if (name == "octonion" || name == "s7" || name == "S7") return AlgebraKind::octonion;
    return std::nullopt;
}

AlgebraElement::AlgebraElement(AlgebraKind kind, std::span<const double> coords) : kind_(kind) {
    if (static_cast<int>(coords.size()) != lgt::dimension(kind)) {
        fail(ErrorKind::invalid_argument,
             "expected " + std::to_string(lgt::dimension(kind)) + " coordinates, got " +
                 std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        c_[i] = coords[i];
    }
}

AlgebraElement AlgebraElement::one(AlgebraKind kind) { return basis(kind, 0); }

AlgebraElement AlgebraElement::basis(AlgebraKind kind, int index) {
    if (index < 0 || index >= lgt::dimension(kind)) {
        fail(ErrorKind::invalid_argument, "basis index out of range");
    }
    AlgebraElement e(kind);
    e.c_[static_cast<std::size_t>(index)] = 1.0;
    return e;
}

AlgebraElement AlgebraElement::from_angle(double theta) {
    AlgebraElement z(AlgebraKind::complex);
    z.c_[0] = std::cos(theta);
    z.c_[1] = std::sin(theta);
    return z;
}

double AlgebraElement::norm_squared() const {
    double s = 0.0;
    for (int i = 0; i < dimension(); ++i) {
        s += c_[static_cast<std::size_t>(i)] * c_[static_cast<std::size_t>(i)];
    }
    return s;
}

double AlgebraElement::norm() const { return std::sqrt(norm_squared()); }

AlgebraElement AlgebraElement::conj() const {
    AlgebraElement r = *this;
    for (int i = 1; i < dimension(); ++i) {
        r.c_[static_cast<std::size_t>(i)] = -r.c_[static_cast<std::size_t>(i)];
    }
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_kind(x, y);
    AlgebraElement r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_kind(x, y);
    AlgebraElement r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
    return r;
}

AlgebraElement operator*(double s, const AlgebraElement& x) {
    AlgebraElement r = x;
    for (auto& v : r.c_) v *= s;
    return r;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.kind_ == y.kind_ && x.c_ == y.c_;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_kind(x, y);
    AlgebraElement r(x.kind());
    switch (x.kind()) {
        case AlgebraKind::complex:
            r[0] = x[0] * y[0] - x[1] * y[1];
            r[1] = x[0] * y[1] + x[1] * y[0];
            break;
        case AlgebraKind::quaternion: {
            const Quat p = hamilton({x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]});
            for (int i = 0; i < 4; ++i) r[i] = p[static_cast<std::size_t>(i)];
            break;
        }
        case AlgebraKind::octonion: {
            const Quat a{x[0], x[1], x[2], x[3]};
            const Quat b{x[4], x[5], x[6], x[7]};
            const Quat c{y[0], y[1], y[2], y[3]};
            const Quat d{y[4], y[5], y[6], y[7]};
            const Quat ac = hamilton(a, c);
            const Quat db = hamilton(quat_conj(d), b);
            const Quat da = hamilton(d, a);
            const Quat bc = hamilton(b, quat_conj(c));
            for (std::size_t i = 0; i < 4; ++i) {
                r[static_cast<int>(i)] = ac[i] - db[i];
                r[static_cast<int>(i) + 4] = da[i] + bc[i];
            }
            break;
        }
    }
    return r;
}

double re_assoc_defect(const AlgebraElement& x, const AlgebraElement& y,
                       const AlgebraElement& z) {
    return std::abs(mul(mul(x, y), z).re() - mul(x, mul(y, z)).re());
}

std::optional<std::pair<int, int>> as_signed_basis(const AlgebraElement& x) {
    std::optional<std::pair<int, int>> found;
    for (int i = 0; i < x.dimension(); ++i) {
        const double v = x[i];
        if (v == 0.0) continue;
        if ((v != 1.0 && v != -1.0) || found) return std::nullopt;
        found = std::pair{i, v > 0 ? 1 : -1};
    }
    return found;
}

int associator_sign(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
    const AlgebraElement left = mul(mul(a, b), c);
    const AlgebraElement right = mul(a, mul(b, c));
    const auto l = as_signed_basis(left);
    const auto r = as_signed_basis(right);
    if (!l || !r || l->first != r->first) {
        fail(ErrorKind::invalid_argument, "associator_sign expects signed basis units");
    }
    return l->second * r->second;
}

AlgebraElement SphereSampler::unit(AlgebraKind kind, Rng& rng) {
    AlgebraElement x(kind);
    for (;;) {
        for (int i = 0; i < x.dimension(); ++i) x[i] = normal_(rng);
        const double n = x.norm();
        if (n > 1e-150) return (1.0 / n) * x;
    }
}

AlgebraElement SphereSampler::imaginary_unit(Rng& rng) {
    AlgebraElement x(AlgebraKind::quaternion);
    for (;;) {
        for (int i = 1; i < 4; ++i) x[i] = normal_(rng);
        const double n = x.norm();
        if (n > 1e-150) return (1.0 / n) * x;
    }
}

AlgebraElement haar_sample(AlgebraKind kind, Rng& rng) {
    SphereSampler sampler;
    return sampler.unit(kind, rng);
}

std::optional<int> UnitSet::index_of(const AlgebraElement& x) const {
    if (x.kind() != kind_) return std::nullopt;
    const auto b = as_signed_basis(x);
    if (!b || b->second != 1) return std::nullopt;
    return b->first;
}

}  // namespace lgt
