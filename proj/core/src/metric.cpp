#include "bzwave/metric.hpp"

#include <cmath>
#include <limits>

#include "bzwave/errors.hpp"

namespace bzwave {

MetricBlock metric_from_fields(double lambda, double phi, double alpha,
                               double f) {
  if (!(alpha > 0.0)) throw NonPositiveAlpha("metric_from_fields: alpha <= 0");
  if (!(f > 0.0)) throw NonPositiveF("metric_from_fields: f <= 0");
  const double ch = std::cosh(lambda);
  const double sh = std::sinh(lambda);
  const double c2 = std::cos(2.0 * phi);
  const double s2 = std::sin(2.0 * phi);
  MetricBlock m;
  m.g11 = alpha * (ch + c2 * sh);
  m.g22 = alpha * (ch - c2 * sh);
  m.g12 = alpha * s2 * sh;
  m.f = f;
  return m;
}

FieldsFromMetric fields_from_metric(const MetricBlock& m) {
  const double det = m.det();
  const double tr = m.g11 + m.g22;
  if (!(det > 0.0) || !(tr > 0.0))
    throw NotPositiveDefinite("fields_from_metric: block not positive definite");

  FieldsFromMetric out;
  out.alpha = std::sqrt(det);

  const double gh11 = m.g11 / out.alpha;
  const double gh22 = m.g22 / out.alpha;
  const double gh12 = m.g12 / out.alpha;

  // sinh L = hypot((g11-g22)/2, g12)/alpha has no cancellation, unlike
  // acosh of the trace, so lambda keeps full relative accuracy near 0.
  const double a = 0.5 * (gh11 - gh22);
  const double b = gh12;
  const double sh = std::hypot(a, b);
  out.lambda = std::asinh(sh);

  const double ch = 0.5 * (gh11 + gh22);
  const double eps = std::numeric_limits<double>::epsilon();
  if (sh <= 4.0 * eps * ch) {
    out.degenerate_angle = true;
    out.phi = 0.0;
    return out;
  }

  double two_phi = std::atan2(b, a);  // (-pi, pi]
  if (two_phi < 0.0) two_phi += 2.0 * M_PI;
  out.phi = 0.5 * two_phi;  // [0, pi)
  return out;
}

}  // namespace bzwave
