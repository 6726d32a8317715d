#include "bzwave/field_state.hpp"

#include <cmath>

#include "bzwave/errors.hpp"

namespace bzwave {

FieldState FieldState::zeros(std::size_t n, double lambda0, double time) {
  FieldState s;
  s.time = time;
  s.lambda0 = lambda0;
  s.lambda_tilde.assign(n, 0.0);
  s.pi.assign(n, 0.0);
  s.phi.assign(n, 0.0);
  s.xi.assign(n, 0.0);
  s.v.assign(n, 0.0);
  s.w.assign(n, 0.0);
  return s;
}

GaugeTransformed gauge_transform(const FieldState& state, const AlphaData& d,
                                 int k, double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0))
    throw NonPositiveScale("gauge_transform: c1, c2 must be positive");
  GaugeTransformed out{state, d};
  const double shift = static_cast<double>(k) * M_PI;
  for (double& p : out.state.phi) p += shift;
  const double lc2 = std::log(c2);
  for (double& vv : out.state.v) vv += lc2;
  out.alpha.scale *= c1;
  return out;
}

}  // namespace bzwave
