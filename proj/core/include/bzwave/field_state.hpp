#pragma once

#include <cstddef>
#include <vector>

#include "bzwave/alpha_data.hpp"

namespace bzwave {

// Grid samples of the dynamical fields at one time level. Lambda splits as
// lambda0 + lambda_tilde with |lambda0 + lambda_tilde| kept away from zero by
// the degeneracy guard.
struct FieldState {
  double time = 0.0;
  double lambda0 = 1.0;
  std::vector<double> lambda_tilde;
  std::vector<double> pi;   // d_t lambda_tilde
  std::vector<double> phi;
  std::vector<double> xi;   // d_t phi
  std::vector<double> v;    // ln f
  std::vector<double> w;    // d_t ln f

  std::size_t size() const { return lambda_tilde.size(); }
  double lambda(std::size_t i) const { return lambda0 + lambda_tilde[i]; }

  static FieldState zeros(std::size_t n, double lambda0, double time = 0.0);
};

struct GaugeTransformed {
  FieldState state;
  AlphaData alpha;
};

// (Lambda, phi, alpha, f) -> (Lambda, phi + k pi, c1 alpha, c2 f).
// Throws NonPositiveScale.
GaugeTransformed gauge_transform(const FieldState& state, const AlphaData& d,
                                 int k, double c1, double c2);

}  // namespace bzwave
