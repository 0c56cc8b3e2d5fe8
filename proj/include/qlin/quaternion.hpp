#pragma once

#include <cmath>
#include <complex>

#include "qlin/errors.hpp"

namespace qlin {

/// Quaternion w + x*i + y*j + z*k with real coefficients.
///
/// Multiplication is associative but not commutative (i*j = k, j*i = -k).
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

/// Hamilton product.
///
/// The summand grouping inside each component is fixed: it makes
/// conj(a*b) == conj(b)*conj(a) hold bitwise, which the matrix-level
/// conjugation and Hermitian rules rely on.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        (a.w * b.w - a.x * b.x) - (a.y * b.y + a.z * b.z),
        (a.w * b.x + a.x * b.w) + (a.y * b.z - a.z * b.y),
        (a.w * b.y + a.y * b.w) + (a.z * b.x - a.x * b.z),
        (a.w * b.z - a.y * b.x) + (a.x * b.y + a.z * b.w),
    };
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double scalar_part(const Quaternion& q) { return q.w; }

constexpr Quaternion vector_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline double vector_norm(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw DivisionByZeroError("inverse of zero quaternion");
    return conjugate(q) / n2;
}

/// Pair-of-complex view (z1, z2) with q = z1 + z2*j, z1 = w + x*i, z2 = y + z*i.
struct ComplexPair {
    std::complex<double> z1;
    std::complex<double> z2;
};

inline ComplexPair to_complex_pair(const Quaternion& q) { return {{q.w, q.x}, {q.y, q.z}}; }

inline Quaternion to_quaternion(const ComplexPair& p) {
    return {p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()};
}

/// Product in the pair representation: (x1, x2)*(z1, z2) = (x1 z1 - x2 z2*, x2 z1* + z2 x1).
inline ComplexPair mul(const ComplexPair& a, const ComplexPair& b) {
    return {a.z1 * b.z1 - a.z2 * std::conj(b.z2), a.z2 * std::conj(b.z1) + b.z2 * a.z1};
}

/// Pure unit quaternion: zero scalar part, unit vector part. Squares to -1 and
/// serves as the axis of a complex subfield C_mu = {a + b*mu}.
class PureUnitQuaternion {
public:
    /// Normalizes (vx, vy, vz); throws DegenerateInputError if the vector vanishes.
    PureUnitQuaternion(double vx, double vy, double vz) {
        const double n = std::sqrt(vx * vx + vy * vy + vz * vz);
        if (n == 0.0 || !std::isfinite(n))
            throw DegenerateInputError("pure unit quaternion needs a nonzero finite vector");
        axis_ = Quaternion{0.0, vx / n, vy / n, vz / n};
    }

    static PureUnitQuaternion i() { return {1.0, 0.0, 0.0}; }
    static PureUnitQuaternion j() { return {0.0, 1.0, 0.0}; }
    static PureUnitQuaternion k() { return {0.0, 0.0, 1.0}; }

    const Quaternion& axis() const { return axis_; }

    bool operator==(const PureUnitQuaternion&) const = default;

private:
    Quaternion axis_;
};

/// Axis of q: the normalized vector part. Throws DegenerateInputError for real q.
inline PureUnitQuaternion puq_of(const Quaternion& q) {
    if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0)
        throw DegenerateInputError("real quaternion has no axis");
    return {q.x, q.y, q.z};
}

inline double axis_dot(const PureUnitQuaternion& a, const PureUnitQuaternion& b) {
    const Quaternion& p = a.axis();
    const Quaternion& q = b.axis();
    return p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool are_orthogonal(const PureUnitQuaternion& mu, const PureUnitQuaternion& nu,
                           double tol = 1e-12) {
    return std::abs(axis_dot(mu, nu)) < tol;
}

/// Deterministic PUQ orthogonal to mu: the normalized rejection of j from mu,
/// or of k when mu is within 1e-6 of +-j.
PureUnitQuaternion orthogonal_complement(const PureUnitQuaternion& mu);

/// True iff q = a + b*mu, i.e. the vector part of q is parallel to mu (or zero).
bool in_complex_subfield(const Quaternion& q, const PureUnitQuaternion& mu, double tol = 1e-12);

/// q = q0p + q1p*mu_perp with q0p, q1p in C_mu.
struct SymplecticParts {
    Quaternion q0p;
    Quaternion q1p;
    PureUnitQuaternion mu;
    PureUnitQuaternion mu_perp;
};

SymplecticParts symplectic_decompose(const Quaternion& q, const PureUnitQuaternion& mu,
                                     const PureUnitQuaternion& mu_perp);

/// q = modulus * (cos(angle) + axis*sin(angle)), angle in (-pi, pi].
struct PolarForm {
    double modulus;
    PureUnitQuaternion axis;
    double angle;
};

/// Polar form of a nonzero quaternion. Of the two equivalent (axis, angle) /
/// (-axis, -angle) choices, returns the one whose first nonzero axis component
/// is positive; negative reals get axis = i, angle = pi.
PolarForm to_polar(const Quaternion& q);

/// Quaternion exponential: exp(w + v) = e^w (cos|v| + (v/|v|) sin|v|).
Quaternion exp(const Quaternion& q);

/// Unique element of the similarity class S(q) inside C_i with nonnegative i part.
inline Quaternion canonical_representative(const Quaternion& q) {
    return {q.w, vector_norm(q), 0.0, 0.0};
}

/// p ~ q iff p = s^-1 q s for some unit s; equivalently equal scalar parts and
/// equal vector-part norms.
inline bool similar(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
    return std::abs(p.w - q.w) <= tol && std::abs(vector_norm(p) - vector_norm(q)) <= tol;
}

}  // namespace qlin
