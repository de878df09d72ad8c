#pragma once

#include "rgate/linalg.hpp"

namespace rgate::su2 {

// Tolerances used across the SU(2) layer; one place, overridable per call
// where it matters.
struct Tolerances {
    double normalization = 1e-12;  // |norm - 1| after every operation
    double bisection = 1e-10;      // |arg(product) - target| in bisect_to_target
    double matrix = 1e-9;          // orthogonality / homomorphism checks
    double interval_margin = 1e-9; // strict-interior margin for irreducibility
};

// Unit quaternion w + x i + y j + z k modeling an element of SU(2).
struct UnitQuaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    UnitQuaternion() = default;
    UnitQuaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    UnitQuaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm() const;
    UnitQuaternion normalized() const;

    friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);
    UnitQuaternion inverse() const { return conjugate(); }

    double imaginary_norm() const;
    bool is_central(double tol = 1e-9) const { return imaginary_norm() < tol; }
};

UnitQuaternion quat_pow(const UnitQuaternion& q, long long e);

// e^{i theta} = cos theta + sin theta * i.
UnitQuaternion exp_i(double theta);

// exp of the pure-imaginary quaternion (vx i + vy j + vz k).
UnitQuaternion exp_pure(double vx, double vy, double vz);

// Rotation angle of v -> q v q^-1 about its axis, i.e. the conjugacy-class
// coordinate theta in [0, pi] with q ~ e^{i theta}. Computed as
// atan2(|Im q|, Re q), which equals arccos(clamp(w, -1, 1)) on unit
// quaternions and stays accurate near 0 and pi.
double arg(const UnitQuaternion& q);

// Adjoint action on the imaginary part: the SO(3) matrix of v -> q v q^-1.
linalg::Mat3 adjoint(const UnitQuaternion& q);

// Closed subinterval of [0, pi].
struct AngleInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t) const { return lo <= t && t <= hi; }
    bool contains_strictly(double t, double margin) const { return lo + margin < t && t < hi - margin; }
};

// Reachable Arg of q1 * s2 where arg(q1) = theta1 and s2 ranges over the
// conjugacy class of angle theta2.
AngleInterval product_angle_interval(double theta1, double theta2);

// Reachable Arg of p * s where arg(p) ranges over I and s over the class of
// angle theta.
AngleInterval fold_angle_interval(const AngleInterval& interval, double theta);

// Element s of the class of angle class_angle, on the i-j great-circle slice
// s(tau) = cos(class_angle) + sin(class_angle)(cos tau * i + sin tau * j),
// such that arg(e^{i theta1} * s) hits target. Throws target_out_of_range if
// target is outside product_angle_interval(theta1, class_angle).
UnitQuaternion bisect_to_target(double theta1, double class_angle, double target,
                                double tol = Tolerances{}.bisection);

// Unit quaternion g with q = g * e^{i arg(q)} * g^-1. For central q any g
// works; the identity is returned.
UnitQuaternion align_conjugator(const UnitQuaternion& q);

}  // namespace rgate::su2
