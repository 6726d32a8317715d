#pragma once

namespace bzwave {

// Symmetric 2x2 metric block together with the conformal factor f of the
// (t,x) part. det g = alpha^2 for states coming from the field dictionary.
struct MetricBlock {
  double g11 = 1.0;
  double g12 = 0.0;
  double g22 = 1.0;
  double f = 1.0;

  double det() const { return g11 * g22 - g12 * g12; }
};

// g = alpha * [[cosh L + cos 2phi sinh L, sin 2phi sinh L],
//              [sin 2phi sinh L, cosh L - cos 2phi sinh L]].
// Throws NonPositiveAlpha / NonPositiveF.
MetricBlock metric_from_fields(double lambda, double phi, double alpha,
                               double f = 1.0);

struct FieldsFromMetric {
  double lambda = 0.0;  // >= 0
  double phi = 0.0;     // in [0, pi)
  double alpha = 1.0;   // sqrt(det g)
  bool degenerate_angle = false;  // lambda ~ 0, phi undetermined, returned 0
};

// Inverts metric_from_fields after normalizing by sqrt(det g), so the
// dictionary is robust to overall scalar factors. Throws NotPositiveDefinite.
FieldsFromMetric fields_from_metric(const MetricBlock& m);

}  // namespace bzwave
