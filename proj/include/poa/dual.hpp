#pragma once

#include <Eigen/Core>
#include <cmath>

namespace poa {

// Forward-mode scalar: value plus gradient w.r.t. the seeded variables of the
// current evaluation. An empty gradient vector means "identically zero", so
// constants cost nothing. Capacity is fixed to keep everything on the stack;
// feature windows in this codebase stay well below it.
inline constexpr int kMaxDualDim = 96;

struct Dual {
  using Grad = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDualDim, 1>;

  double v = 0.0;
  Grad g;  // size 0 <=> zero gradient

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design
  Dual(double value, Grad grad) : v(value), g(std::move(grad)) {}

  static Dual seeded(double value, int dim, int index) {
    Dual d(value);
    d.g = Grad::Zero(dim);
    d.g[index] = 1.0;
    return d;
  }

  Dual& operator+=(const Dual& o) { *this = *this + o; return *this; }
  Dual& operator-=(const Dual& o) { *this = *this - o; return *this; }
  Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
  Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

  friend Dual operator-(const Dual& a) { return a.g.size() ? Dual(-a.v, -a.g) : Dual(-a.v); }

  friend Dual operator+(const Dual& a, const Dual& b) {
    if (!a.g.size()) return Dual(a.v + b.v, b.g);
    if (!b.g.size()) return Dual(a.v + b.v, a.g);
    return Dual(a.v + b.v, a.g + b.g);
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    if (!a.g.size()) return b.g.size() ? Dual(a.v - b.v, (-b.g).eval()) : Dual(a.v - b.v);
    if (!b.g.size()) return Dual(a.v - b.v, a.g);
    return Dual(a.v - b.v, a.g - b.g);
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    if (!a.g.size() && !b.g.size()) return Dual(a.v * b.v);
    if (!a.g.size()) return Dual(a.v * b.v, (a.v * b.g).eval());
    if (!b.g.size()) return Dual(a.v * b.v, (b.v * a.g).eval());
    return Dual(a.v * b.v, a.v * b.g + b.v * a.g);
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.v;
    if (!a.g.size() && !b.g.size()) return Dual(a.v * inv);
    if (!b.g.size()) return Dual(a.v * inv, (inv * a.g).eval());
    if (!a.g.size()) return Dual(a.v * inv, (-a.v * inv * inv * b.g).eval());
    return Dual(a.v * inv, inv * a.g - (a.v * inv * inv) * b.g);
  }

  friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
  friend bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }
};

inline Dual sqrt(const Dual& a) {
  const double s = std::sqrt(a.v);
  if (!a.g.size()) return Dual(s);
  const double d = 0.5 / (s > 1e-300 ? s : 1e-300);
  return Dual(s, (d * a.g).eval());
}

inline Dual abs(const Dual& a) { return a.v < 0.0 ? -a : a; }

inline Dual sin(const Dual& a) {
  if (!a.g.size()) return Dual(std::sin(a.v));
  return Dual(std::sin(a.v), (std::cos(a.v) * a.g).eval());
}
inline Dual cos(const Dual& a) {
  if (!a.g.size()) return Dual(std::cos(a.v));
  return Dual(std::cos(a.v), (-std::sin(a.v) * a.g).eval());
}
inline Dual atan2(const Dual& y, const Dual& x) {
  const double denom = x.v * x.v + y.v * y.v;
  Dual out(std::atan2(y.v, x.v));
  if (y.g.size() || x.g.size()) {
    Dual::Grad g = Dual::Grad::Zero(y.g.size() ? y.g.size() : x.g.size());
    if (y.g.size()) g += (x.v / denom) * y.g;
    if (x.g.size()) g -= (y.v / denom) * x.g;
    out.g = std::move(g);
  }
  return out;
}

inline double value(double x) { return x; }
inline double value(const Dual& x) { return x.v; }

// scalar_cast<S>: lift a double constant into the computation scalar.
template <class S>
inline S scalar_cast(double x) { return S(x); }

}  // namespace poa
