#pragma once

#include <Eigen/Core>
#include <cmath>

#include "poa/dual.hpp"

namespace poa {

// Minimal 3D math templated on the computation scalar (double or Dual).
// Kept hand-rolled so derivative propagation stays transparent.

template <class S>
struct V3 {
  S x{}, y{}, z{};

  V3() = default;
  V3(S x_, S y_, S z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static V3 zero() { return V3(S(0.0), S(0.0), S(0.0)); }
  static V3 from(const Eigen::Vector3d& v) { return V3(S(v.x()), S(v.y()), S(v.z())); }

  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend V3 operator+(const V3& a, const V3& b) { return V3(a.x + b.x, a.y + b.y, a.z + b.z); }
  friend V3 operator-(const V3& a, const V3& b) { return V3(a.x - b.x, a.y - b.y, a.z - b.z); }
  friend V3 operator-(const V3& a) { return V3(-a.x, -a.y, -a.z); }
  friend V3 operator*(const S& s, const V3& a) { return V3(s * a.x, s * a.y, s * a.z); }
  friend V3 operator*(const V3& a, const S& s) { return s * a; }
  friend V3 operator/(const V3& a, const S& s) { return V3(a.x / s, a.y / s, a.z / s); }
  V3& operator+=(const V3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  V3& operator-=(const V3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  S dot(const V3& o) const { return x * o.x + y * o.y + z * o.z; }
  V3 cross(const V3& o) const {
    return V3(y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x);
  }
  S squaredNorm() const { return dot(*this); }
  S norm() const { using std::sqrt; using poa::sqrt; return sqrt(squaredNorm()); }
  // Norm smoothed near zero; eps2 is added under the root.
  S snorm(double eps2) const { using std::sqrt; using poa::sqrt; return sqrt(squaredNorm() + S(eps2)); }
  V3 normalized() const { return *this / norm(); }

  Eigen::Vector3d values() const { return Eigen::Vector3d(value(x), value(y), value(z)); }
};

using V3d = V3<double>;

inline Eigen::Vector3d to_eigen(const V3d& v) { return Eigen::Vector3d(v.x, v.y, v.z); }

// Unit quaternion (w, x, y, z) mapping body to world: v_world = q * v_body * q^-1.
template <class S>
struct Quat {
  S w{}, x{}, y{}, z{};

  Quat() : w(S(1.0)), x(S(0.0)), y(S(0.0)), z(S(0.0)) {}
  Quat(S w_, S x_, S y_, S z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static Quat identity() { return Quat(); }
  static Quat from(const Eigen::Vector4d& q) { return Quat(S(q[0]), S(q[1]), S(q[2]), S(q[3])); }

  friend Quat operator*(const Quat& a, const Quat& b) {
    return Quat(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }

  Quat conj() const { return Quat(w, -x, -y, -z); }
  S squaredNorm() const { return w * w + x * x + y * y + z * z; }
  Quat normalized() const {
    using std::sqrt; using poa::sqrt;
    S n = sqrt(squaredNorm());
    return Quat(w / n, x / n, y / n, z / n);
  }

  V3<S> rotate(const V3<S>& v) const {
    // v + 2 q_vec x (q_vec x v + w v)
    const V3<S> qv(x, y, z);
    const V3<S> t = qv.cross(v) + w * v;
    return v + S(2.0) * qv.cross(t);
  }
  V3<S> rotate_inv(const V3<S>& v) const { return conj().rotate(v); }

  // Rotation-vector logarithm (angle*axis). Smooth small-angle branch.
  V3<S> rotvec() const {
    using std::sqrt; using poa::sqrt;
    using std::atan2; using poa::atan2;
    Quat q = *this;
    if (value(q.w) < 0.0) q = Quat(-q.w, -q.x, -q.y, -q.z);  // hemisphere fix
    const V3<S> qv(q.x, q.y, q.z);
    const S s2 = qv.squaredNorm();
    if (value(s2) < 1e-16) {
      // sin(theta/2) ~ theta/2: rotvec ~ 2*qv/w with cubic correction
      return (S(2.0) / q.w) * (S(1.0) - s2 / (S(3.0) * q.w * q.w)) * qv;
    }
    const S s = sqrt(s2);
    const S angle = S(2.0) * atan2(s, q.w);
    return (angle / s) * qv;
  }

  Eigen::Vector4d values() const {
    return Eigen::Vector4d(value(w), value(x), value(y), value(z));
  }
};

using Quatd = Quat<double>;

inline Quatd quat_from_rotvec(const Eigen::Vector3d& r) {
  const double a = r.norm();
  if (a < 1e-12) return Quatd(1.0, 0.5 * r.x(), 0.5 * r.y(), 0.5 * r.z());
  const double c = std::cos(0.5 * a), s = std::sin(0.5 * a) / a;
  return Quatd(c, s * r.x(), s * r.y(), s * r.z());
}

template <class S>
Eigen::Matrix3d rot_matrix(const Quat<S>& q) {
  Quat<double> qd(value(q.w), value(q.x), value(q.y), value(q.z));
  Eigen::Matrix3d R;
  const double w = qd.w, x = qd.x, y = qd.y, z = qd.z;
  R << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return R;
}

// Rigid transform (rotation then translation): p_world = q*p + t.
template <class S>
struct Transform {
  Quat<S> q;
  V3<S> t = V3<S>::zero();

  Transform() = default;
  Transform(Quat<S> q_, V3<S> t_) : q(std::move(q_)), t(std::move(t_)) {}
  static Transform identity() { return Transform(); }

  V3<S> apply(const V3<S>& p) const { return q.rotate(p) + t; }
  V3<S> apply_inv(const V3<S>& p) const { return q.rotate_inv(p - t); }

  friend Transform operator*(const Transform& a, const Transform& b) {
    return Transform(a.q * b.q, a.q.rotate(b.t) + a.t);
  }
  Transform inverse() const {
    Quat<S> qc = q.conj();
    return Transform(qc, -qc.rotate(t));
  }
};

using Transformd = Transform<double>;

template <class S>
Transform<S> lift(const Transformd& p) {
  return Transform<S>(Quat<S>(S(p.q.w), S(p.q.x), S(p.q.y), S(p.q.z)),
                      V3<S>(S(p.t.x), S(p.t.y), S(p.t.z)));
}

template <class S>
Transformd values(const Transform<S>& p) {
  return Transformd(Quatd(value(p.q.w), value(p.q.x), value(p.q.y), value(p.q.z)),
                    V3d(value(p.t.x), value(p.t.y), value(p.t.z)));
}

}  // namespace poa
