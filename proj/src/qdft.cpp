#include "qlin/qdft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace qlin {

namespace {

QuatMatrix build_fourier(std::size_t size, const PureUnitQuaternion& mu) {
    if (size < 1) throw ShapeMismatchError("fourier_matrix needs size >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    const double two_pi = 8.0 * std::atan(1.0);
    const Quaternion axis = mu.axis();
    QuatMatrix f(size, size);
    for (std::size_t m = 0; m < size; ++m)
        for (std::size_t u = 0; u < size; ++u) {
            const double phase_index = static_cast<double>((m * u) % size);
            const double theta = -two_pi * phase_index / static_cast<double>(size);
            f(m, u) = scale * exp(theta * axis);
        }
    return f;
}

// read-shared memoization keyed by (size, axis components)
const QuatMatrix& cached_fourier(std::size_t size, const PureUnitQuaternion& mu) {
    using Key = std::tuple<std::size_t, double, double, double>;
    static std::map<Key, QuatMatrix> cache;
    static std::mutex guard;
    const Quaternion& a = mu.axis();
    const Key key{size, a.x, a.y, a.z};
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_fourier(size, mu)).first;
    return it->second;
}

}  // namespace

FourierMatrix fourier_matrix(std::size_t size, const PureUnitQuaternion& mu) {
    return {cached_fourier(size, mu), mu, size};
}

QuatMatrix dqft(const QuatMatrix& a, QdftKind kind, const PureUnitQuaternion& mu1,
                const PureUnitQuaternion& mu2) {
    const QuatMatrix& f1 = cached_fourier(a.rows(), mu1);
    const QuatMatrix& f2 = cached_fourier(a.cols(), mu2);
    switch (kind) {
        case QdftKind::TwoSide:
            return mul_left(mul_left(f1, a), f2);
        case QdftKind::LeftSide:
            return mul_left(f1, mul_right(a, f2));
        case QdftKind::RightSide:
            return mul_left(mul_right(f1, a), f2);
    }
    throw Error("unknown transform kind");
}

QuatMatrix idqft(const QuatMatrix& a, QdftKind kind, const PureUnitQuaternion& mu1,
                 const PureUnitQuaternion& mu2) {
    const QuatMatrix f1h = herm(cached_fourier(a.rows(), mu1));
    const QuatMatrix f2h = herm(cached_fourier(a.cols(), mu2));
    switch (kind) {
        case QdftKind::TwoSide:
            return mul_left(mul_left(f1h, a), f2h);
        case QdftKind::LeftSide:
            return mul_right(mul_left(f1h, a), f2h);
        case QdftKind::RightSide:
            return mul_right(f1h, mul_left(a, f2h));
    }
    throw Error("unknown transform kind");
}

}  // namespace qlin
