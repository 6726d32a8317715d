#include "bzwave/geometry.hpp"

#include <cmath>

#include "bzwave/errors.hpp"

namespace bzwave {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!(x_max > x_min)) throw ConfigError("Grid1D: x_max must exceed x_min");
  if (n < 8) throw ConfigError("Grid1D: need at least 8 nodes");
  if (!std::isfinite(x_min) || !std::isfinite(x_max))
    throw ConfigError("Grid1D: endpoints must be finite");
  dx_ = (x_max_ - x_min_) / static_cast<double>(n_ - 1);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = node(i);
  return xs;
}

}  // namespace bzwave
