#pragma once

#include <cmath>

namespace bzwave {

// Forward-mode jet (value, d/dt, d/dx). Exact solutions seed these with
// analytic alpha/beta jets and push them through the dressing algebra, so
// first derivatives come out to machine precision.
struct Dual2 {
  double v = 0.0;
  double dt = 0.0;
  double dx = 0.0;

  Dual2() = default;
  Dual2(double value) : v(value) {}
  Dual2(double value, double dt_, double dx_) : v(value), dt(dt_), dx(dx_) {}
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.v + b.v, a.dt + b.dt, a.dx + b.dx};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.v - b.v, a.dt - b.dt, a.dx - b.dx};
}
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.dt, -a.dx}; }
inline Dual2 operator*(const Dual2& a, const Dual2& b) {
  return {a.v * b.v, a.dt * b.v + a.v * b.dt, a.dx * b.v + a.v * b.dx};
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) {
  const double iv = 1.0 / b.v;
  const double q = a.v * iv;
  return {q, (a.dt - q * b.dt) * iv, (a.dx - q * b.dx) * iv};
}

inline Dual2 chain(double f, double fp, const Dual2& a) {
  return {f, fp * a.dt, fp * a.dx};
}

inline Dual2 sqrt(const Dual2& a) {
  const double r = std::sqrt(a.v);
  return chain(r, 0.5 / r, a);
}
inline Dual2 log(const Dual2& a) { return chain(std::log(a.v), 1.0 / a.v, a); }
inline Dual2 exp(const Dual2& a) {
  const double e = std::exp(a.v);
  return chain(e, e, a);
}
inline Dual2 sinh(const Dual2& a) {
  return chain(std::sinh(a.v), std::cosh(a.v), a);
}
inline Dual2 cosh(const Dual2& a) {
  return chain(std::cosh(a.v), std::sinh(a.v), a);
}
inline Dual2 pow(const Dual2& a, double p) {
  const double f = std::pow(a.v, p);
  return chain(f, p * f / a.v, a);
}
inline Dual2 asinh(const Dual2& a) {
  return chain(std::asinh(a.v), 1.0 / std::sqrt(a.v * a.v + 1.0), a);
}
inline Dual2 acosh(const Dual2& a) {
  return chain(std::acosh(a.v), 1.0 / std::sqrt(a.v * a.v - 1.0), a);
}

// atan2 with both arguments varying: d = (x dy - y dx) / (x^2 + y^2).
inline Dual2 atan2(const Dual2& y, const Dual2& x) {
  const double r2 = x.v * x.v + y.v * y.v;
  return {std::atan2(y.v, x.v), (x.v * y.dt - y.v * x.dt) / r2,
          (x.v * y.dx - y.v * x.dx) / r2};
}

}  // namespace bzwave
