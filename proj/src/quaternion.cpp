#include "qlin/quaternion.hpp"

#include <cmath>

namespace qlin {

PureUnitQuaternion orthogonal_complement(const PureUnitQuaternion& mu) {
    const Quaternion& a = mu.axis();
    const double dj2 = a.x * a.x + (a.y - 1.0) * (a.y - 1.0) + a.z * a.z;
    const double djm2 = a.x * a.x + (a.y + 1.0) * (a.y + 1.0) + a.z * a.z;
    const bool near_j = dj2 < 1e-12 || djm2 < 1e-12;
    // reference vector whose rejection from mu cannot vanish
    const double rx = 0.0, ry = near_j ? 0.0 : 1.0, rz = near_j ? 1.0 : 0.0;
    const double d = rx * a.x + ry * a.y + rz * a.z;
    return {rx - d * a.x, ry - d * a.y, rz - d * a.z};
}

bool in_complex_subfield(const Quaternion& q, const PureUnitQuaternion& mu, double tol) {
    const Quaternion& a = mu.axis();
    const double d = q.x * a.x + q.y * a.y + q.z * a.z;
    const double ex = q.x - d * a.x;
    const double ey = q.y - d * a.y;
    const double ez = q.z - d * a.z;
    return std::sqrt(ex * ex + ey * ey + ez * ez) <= tol;
}

SymplecticParts symplectic_decompose(const Quaternion& q, const PureUnitQuaternion& mu,
                                     const PureUnitQuaternion& mu_perp) {
    if (!are_orthogonal(mu, mu_perp))
        throw InvalidAxesError("symplectic decomposition needs orthogonal axes");
    const Quaternion& m = mu.axis();
    const Quaternion& p = mu_perp.axis();
    const Quaternion mp = m * p;  // third axis of the orthonormal basis {1, mu, mu_perp, mu*mu_perp}
    const double c1 = q.x * m.x + q.y * m.y + q.z * m.z;
    const double c2 = q.x * p.x + q.y * p.y + q.z * p.z;
    const double c3 = q.x * mp.x + q.y * mp.y + q.z * mp.z;
    return {Quaternion::real(q.w) + c1 * m, Quaternion::real(c2) + c3 * m, mu, mu_perp};
}

PolarForm to_polar(const Quaternion& q) {
    if (q == Quaternion{}) throw DegenerateInputError("polar form of zero quaternion");
    const double m = modulus(q);
    const double vn = vector_norm(q);
    if (vn == 0.0) {
        // real input: angle 0 or pi, axis fixed to i
        return {m, PureUnitQuaternion::i(), q.w > 0.0 ? 0.0 : 4.0 * std::atan(1.0)};
    }
    double ax = q.x / vn, ay = q.y / vn, az = q.z / vn;
    double angle = std::atan2(vn, q.w);
    const double first = ax != 0.0 ? ax : (ay != 0.0 ? ay : az);
    if (first < 0.0) {
        ax = -ax;
        ay = -ay;
        az = -az;
        angle = -angle;
    }
    return {m, PureUnitQuaternion{ax, ay, az}, angle};
}

Quaternion exp(const Quaternion& q) {
    const double s = std::exp(q.w);
    const double vn = vector_norm(q);
    if (vn == 0.0) return Quaternion::real(s);
    const double c = s * std::cos(vn);
    const double f = s * std::sin(vn) / vn;
    return {c, f * q.x, f * q.y, f * q.z};
}

}  // namespace qlin
