#pragma once

#include <string>

#include "bzwave/alpha_data.hpp"
#include "bzwave/geometry.hpp"
#include "bzwave/metric.hpp"
#include "bzwave/profiles.hpp"

namespace bzwave {

struct KasnerParams {
  double d = 1.0;  // Kasner parameter, d >= 1 for the finite-energy setting
};

struct SolitonParams {
  double d = 1.0;
  double w = 2.0;        // pole position; must exceed sup(beta + alpha)
  double C_beta = 0.0;   // additive constant in beta
  double C_rho = 0.0;    // constant in rho = d ln(mu/alpha) + C
  bool with_conformal_factor = true;  // assemble f from the Kasner background f0
};

// Closed-form fields and first derivatives at a point, plus the metric block.
struct ExactEval {
  double lambda = 0.0, lambda_t = 0.0, lambda_x = 0.0;
  double phi = 0.0, phi_t = 0.0, phi_x = 0.0;
  double alpha = 1.0, alpha_t = 0.0, alpha_x = 0.0;
  bool has_f = false;
  double v = 0.0, v_t = 0.0, v_x = 0.0;  // ln f and derivatives, when present
  MetricBlock g;                          // determinant-normalized block
  std::string family;

  // Soliton bookkeeping (zero for other families): the raw determinant factor
  // det g_raw / alpha^2 and both trace readings of cosh(Lambda).
  double det_ratio = 0.0;
  double cosh_lambda_paper = 0.0;
  double cosh_lambda_normalized = 0.0;
  double mu = 0.0, mu_bar = 0.0;
};

// Traveling family Lambda = h(x + dir*t), phi = k(...), alpha = l(...),
// f = m(...); any smooth profiles with l, m > 0 solve the full system.
struct TravelingProfiles {
  ProfilePtr h;
  ProfilePtr k;
  ProfilePtr l;  // added to baseline 1: alpha = 1 + l(s)
  ProfilePtr m;  // added to baseline 1: f = 1 + m(s)
  double h_baseline = 1.0;  // Lambda = h_baseline + h(s)
  int direction = -1;       // -1: right-mover x - t, +1: left-mover x + t
};

ExactEval eval_traveling(const TravelingProfiles& tp, const SpacetimePoint& p);

// Builds the alpha data that reproduces alpha = 1 + l(x + dir*t) through the
// D'Alembert formula (alpha0_tilde = l, alpha1 = dir * l').
AlphaData traveling_alpha_data(const TravelingProfiles& tp);

// Kasner background Lambda = d ln(alpha), phi = 0. The compatible conformal
// factor ln f = ((d^2-1)/2) ln(alpha) is included (it solves the ln f wave
// equation with the Kasner source).
ExactEval eval_kasner_background(const KasnerParams& kp, const AlphaData& d,
                                 const SpacetimePoint& p);

// One-soliton dressing of the Kasner background via the pole function
// mu = (w - beta) - sqrt((w - beta)^2 - alpha^2) (minus branch, mu in (0,alpha]).
// Fields are extracted from the determinant-normalized metric; the raw
// determinant factor and the paper's unnormalized cosh(Lambda) are recorded.
ExactEval eval_kasner_soliton(const SolitonParams& sp, const AlphaData& d,
                              const SpacetimePoint& p);

// Einstein-Rosen background Lambda0 = J0(r) sin(t), alpha = r, spacelike.
ExactEval eval_er_bessel(const SpacetimePoint& p);  // p = (t, r), r > 0

enum class ErSeedMode { Zero, Bessel };

struct ErSolitonParams {
  double w = 10.0;       // pole parameter omega
  double K = 0.0;        // additive constant in gamma (ln C)
  int branch = +1;       // sign choice in mu = (w-t) +/- sqrt((w-t)^2 - r^2)
  ErSeedMode seed = ErSeedMode::Bessel;
  SpacetimePoint base{0.0, 1.0};  // reference point where rho = rho0
  double rho0 = 0.0;
  bool integrate_r_first = true;  // axis-aligned path order (for the
                                  // path-independence oracle)
};

struct ErSolitonEval {
  ExactEval fields;
  double rho = 0.0;
  // |d_r(d_t rho) - d_t(d_r rho)| at p, the path-independence witness.
  double cross_derivative_residual = 0.0;
  // Max deviation between the normalized metric and
  // metric_from_fields(lambda, phi, alpha).
  double diag1_consistency = 0.0;
};

ErSolitonEval eval_er_soliton(const ErSolitonParams& params,
                              const SpacetimePoint& p);

}  // namespace bzwave
