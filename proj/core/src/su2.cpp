#include "rgate/su2.hpp"

#include <algorithm>
#include <cmath>

#include "rgate/errors.hpp"

namespace rgate::su2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double UnitQuaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

UnitQuaternion UnitQuaternion::normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
}

double UnitQuaternion::imaginary_norm() const { return std::sqrt(x * x + y * y + z * z); }

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
    UnitQuaternion r{
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
    return r.normalized();
}

UnitQuaternion quat_pow(const UnitQuaternion& q, long long e) {
    if (e < 0) return quat_pow(q.inverse(), -e);
    UnitQuaternion acc;  // identity
    UnitQuaternion base = q;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

UnitQuaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

UnitQuaternion exp_pure(double vx, double vy, double vz) {
    const double t = std::sqrt(vx * vx + vy * vy + vz * vz);
    const double s = t < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
    return UnitQuaternion{std::cos(t), s * vx, s * vy, s * vz}.normalized();
}

double arg(const UnitQuaternion& q) { return std::atan2(q.imaginary_norm(), q.w); }

linalg::Mat3 adjoint(const UnitQuaternion& q) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    return {
        1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
        2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y),
    };
}

AngleInterval product_angle_interval(double theta1, double theta2) {
    return {std::fabs(theta1 - theta2), std::min(theta1 + theta2, 2.0 * kPi - theta1 - theta2)};
}

AngleInterval fold_angle_interval(const AngleInterval& interval, double theta) {
    AngleInterval out;
    if (interval.contains(theta))
        out.lo = 0.0;
    else
        out.lo = std::min(std::fabs(interval.lo - theta), std::fabs(interval.hi - theta));
    if (interval.contains(kPi - theta)) {
        out.hi = kPi;
    } else {
        const double at_lo = std::min(interval.lo + theta, 2.0 * kPi - interval.lo - theta);
        const double at_hi = std::min(interval.hi + theta, 2.0 * kPi - interval.hi - theta);
        out.hi = std::max(at_lo, at_hi);
    }
    return out;
}

UnitQuaternion bisect_to_target(double theta1, double class_angle, double target, double tol) {
    const AngleInterval range = product_angle_interval(theta1, class_angle);
    const double slack = 1e-12;
    if (target < range.lo - slack || target > range.hi + slack)
        throw target_out_of_range("bisect_to_target: target outside reachable interval");
    target = std::clamp(target, range.lo, range.hi);

    const UnitQuaternion q1 = exp_i(theta1);
    const auto element = [&](double tau) {
        return UnitQuaternion{std::cos(class_angle), std::sin(class_angle) * std::cos(tau),
                              std::sin(class_angle) * std::sin(tau), 0.0}
            .normalized();
    };
    // arg(q1 * s(tau)) decreases monotonically from range.hi at tau = 0 to
    // range.lo at tau = pi.
    double lo = 0.0, hi = kPi;
    UnitQuaternion best = element(0.0);
    double best_err = std::fabs(arg(q1 * best) - target);
    for (int iter = 0; iter < 200 && best_err > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const UnitQuaternion s = element(mid);
        const double a = arg(q1 * s);
        if (std::fabs(a - target) < best_err) {
            best = s;
            best_err = std::fabs(a - target);
        }
        if (a > target)
            lo = mid;
        else
            hi = mid;
    }
    if (best_err > tol) {
        // Degenerate class (central factor): arg is constant in tau.
        if (best_err <= 1e-9) return best;
        throw target_out_of_range("bisect_to_target: bisection did not reach target");
    }
    return best;
}

UnitQuaternion align_conjugator(const UnitQuaternion& q) {
    const double imag = q.imaginary_norm();
    if (imag < 1e-14) return {};
    const double ux = q.x / imag, uy = q.y / imag, uz = q.z / imag;
    // Rotation taking the i-axis to (ux, uy, uz): axis e1 x u, angle beta.
    const double dot = std::clamp(ux, -1.0, 1.0);
    if (dot > 1.0 - 1e-14) return {};
    if (dot < -1.0 + 1e-14) return {0.0, 0.0, 1.0, 0.0};  // pi about j
    double ax = 0.0, ay = -uz, az = uy;                   // e1 x u
    const double an = std::sqrt(ay * ay + az * az);
    ay /= an;
    az /= an;
    const double half = 0.5 * std::acos(dot);
    return UnitQuaternion{std::cos(half), std::sin(half) * ax, std::sin(half) * ay,
                          std::sin(half) * az}
        .normalized();
}

}  // namespace rgate::su2
