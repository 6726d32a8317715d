#pragma once

#include <cstddef>
#include <vector>

namespace bzwave {

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
};

// Null coordinates u = (t+x)/2, ubar = (t-x)/2, so u + ubar = t and
// u - ubar = x round-trip exactly.
struct NullCoords {
  double u = 0.0;
  double ubar = 0.0;
};

inline NullCoords null_coords(const SpacetimePoint& p) {
  return {0.5 * (p.t + p.x), 0.5 * (p.t - p.x)};
}

inline SpacetimePoint point_from_null(const NullCoords& nc) {
  return {nc.u + nc.ubar, nc.u - nc.ubar};
}

// A scalar field value with its first derivatives at a point.
struct FirstJet {
  double value = 0.0;
  double dt = 0.0;
  double dx = 0.0;
};

// Directional derivatives along L = dt + dx and Lbar = dt - dx.
struct NullDerivatives {
  double L = 0.0;
  double Lbar = 0.0;
};

inline NullDerivatives null_derivatives(const FirstJet& j) {
  return {j.dt + j.dx, j.dt - j.dx};
}

// Q0(f,g) = f_x g_x - f_t g_t, the Minkowski contraction of gradients with
// signature (-,+). Bilinear and symmetric.
inline double null_form_q0(const FirstJet& f, const FirstJet& g) {
  return f.dx * g.dx - f.dt * g.dt;
}

// Uniform grid with nodes x_i = x_min + i*dx, i = 0..n-1.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, std::size_t n);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n() const { return n_; }
  double dx() const { return dx_; }
  double node(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx_; }
  std::vector<double> nodes() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

}  // namespace bzwave
