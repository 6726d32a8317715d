#include "bzwave/alpha_data.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "bzwave/errors.hpp"

namespace bzwave {

AlphaData AlphaData::zero() {
  AlphaData d;
  d.alpha0_tilde = std::make_shared<ZeroProfile>();
  d.alpha1 = std::make_shared<ZeroProfile>();
  return d;
}

AlphaJet2 alpha_jet_radial(double r) {
  if (!(r > 0.0)) throw NonPositiveRadius("alpha = r requires r > 0");
  AlphaJet2 j;
  j.alpha = r;
  j.dt = 0.0;
  j.dx = 1.0;
  j.dtt = j.dtx = j.dxx = 0.0;
  j.L = 1.0;
  j.Lbar = -1.0;
  return j;
}

AlphaJet2 alpha_jet_constant(double value) {
  if (!(value > 0.0)) throw NonPositiveAlpha("constant alpha must be positive");
  AlphaJet2 j;
  j.alpha = value;
  return j;
}

AlphaJet2 alpha_eval(const AlphaData& d, const SpacetimePoint& p) {
  const Profile& a0 = *d.alpha0_tilde;
  const Profile& a1 = *d.alpha1;
  const double up = p.t + p.x;   // 2u
  const double um = p.x - p.t;   // -2ubar

  const double a0p = a0.value(up), a0m = a0.value(um);
  const double d0p = a0.d1(up), d0m = a0.d1(um);
  const double dd0p = a0.d2(up), dd0m = a0.d2(um);
  const double a1p = a1.value(up), a1m = a1.value(um);
  const double d1p = a1.d1(up), d1m = a1.d1(um);
  const double A1p = a1.antiderivative(up), A1m = a1.antiderivative(um);

  AlphaJet2 j;
  const double s = d.scale;
  j.alpha = s * (1.0 + 0.5 * (a0p + a0m + A1p - A1m));
  j.dx = s * 0.5 * (d0p + d0m + a1p - a1m);
  j.dt = s * 0.5 * (d0p - d0m + a1p + a1m);
  j.dxx = s * 0.5 * (dd0p + dd0m + d1p - d1m);
  j.dtx = s * 0.5 * (dd0p - dd0m + d1p + d1m);
  j.dtt = j.dxx;  // alpha solves the 1D wave equation
  j.L = s * (d0p + a1p);
  j.Lbar = s * (a1m - d0m);
  return j;
}

BetaJet beta_eval(const AlphaData& d, double C, const SpacetimePoint& p) {
  const Profile& a0 = *d.alpha0_tilde;
  const Profile& a1 = *d.alpha1;
  const double up = p.t + p.x;
  const double um = p.x - p.t;

  // The 1/2 prefactor mirrors the D'Alembert formula for alpha; it is what
  // makes the conjugacy d_t beta = d_x alpha exact (checked by the
  // finite-difference oracle in the tests).
  BetaJet b;
  const double s = d.scale;
  b.beta = C + s * 0.5 * (a0.value(up) - a0.value(um) +
                          a1.antiderivative(up) + a1.antiderivative(um));
  b.dt = s * 0.5 * (a0.d1(up) + a0.d1(um) + a1.value(up) - a1.value(um));
  b.dx = s * 0.5 * (a0.d1(up) - a0.d1(um) + a1.value(up) + a1.value(um));
  return b;
}

double null_tolerance(const AlphaJet2& j) {
  return 1e-10 * (j.dx * j.dx + j.dt * j.dt + 1.0);
}

GradientClass classify_gradient(const AlphaJet2& j, double tol) {
  const double q = -j.L * j.Lbar;  // (dx a)^2 - (dt a)^2, factored
  if (q < -tol) return GradientClass::Timelike;
  if (q > tol) return GradientClass::Spacelike;
  return GradientClass::Null;
}

GradientClass classify_gradient(const AlphaJet2& j) {
  return classify_gradient(j, null_tolerance(j));
}

double kappa(const AlphaJet2& j) {
  const double q = -j.L * j.Lbar;
  if (std::abs(q) <= null_tolerance(j))
    throw NullGradient("kappa: gradient of alpha is null at this point");
  return j.alpha / q;
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.name << " (measured "
       << c.measured << ", limit " << c.limit << ")\n";
  }
  os << "[info] Einstein compatibility conditions: not formalized, unchecked\n";
  return os.str();
}

ValidationReport validate_alpha_data(const AlphaData& d) {
  const Profile& a0 = *d.alpha0_tilde;
  const Profile& a1 = *d.alpha1;

  double S = std::max({a0.support_radius(), a1.support_radius(), 20.0});
  if (!std::isfinite(S)) S = 50.0;  // constant datum, test mode
  const std::size_t N = 4001;
  const double ds = 2.0 * S / static_cast<double>(N - 1);

  double min_a1 = std::numeric_limits<double>::infinity();
  double sup_bound = 0.0;
  double worst_env0 = -std::numeric_limits<double>::infinity();
  double worst_env1 = -std::numeric_limits<double>::infinity();
  double worst_timelike = -std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < N; ++i) {
    const double s = -S + static_cast<double>(i) * ds;
    const double a1v = a1.value(s);
    min_a1 = std::min(min_a1, a1v);
    for (int n = 0; n <= 2; ++n) {
      const double f0 = n == 0 ? a0.value(s) : (n == 1 ? a0.d1(s) : a0.d2(s));
      const double f1 = n == 0 ? a1v : (n == 1 ? a1.d1(s) : a1.d2(s));
      sup_bound = std::max(sup_bound, std::abs(f0) + std::abs(f1));
    }
    // Envelopes sampled in u, with s = 2u.
    const double u = 0.5 * s;
    const double phi34 =
        std::pow(1.0 + u * u, 0.75 * (1.0 + d.delta));
    worst_env0 = std::max(worst_env0,
                          std::max(std::abs(a0.d1(s)), std::abs(a0.d2(s))) -
                              d.K1 * d.gamma / phi34);
    worst_env1 = std::max(worst_env1,
                          std::max(std::abs(a1v), std::abs(a1.d1(s))) -
                              d.K2 * d.gamma / phi34);
    worst_timelike = std::max(worst_timelike, std::abs(a0.d1(s)) - a1v);
  }

  ValidationReport r;
  r.checks.push_back({"alpha1 positive", min_a1 > 0.0, min_a1, 0.0});
  r.checks.push_back({"sup |a0^(n)|+|a1^(n)| < gamma/2", sup_bound < 0.5 * d.gamma,
                      sup_bound, 0.5 * d.gamma});
  r.checks.push_back(
      {"envelope |a0^(n)(2u)| <= K1 gamma / phi^{3/4}", worst_env0 <= 0.0,
       worst_env0, 0.0});
  r.checks.push_back(
      {"envelope |a1^(n)(2u)| <= K2 gamma / phi^{3/4}", worst_env1 <= 0.0,
       worst_env1, 0.0});
  r.checks.push_back({"timelike sufficient |a0'| < alpha1",
                      worst_timelike < 0.0, worst_timelike, 0.0});
  return r;
}

CosmologicalReport check_cosmological(const AlphaData& d, const Grid1D& grid,
                                      double t_max, std::size_t nt,
                                      double c0) {
  CosmologicalReport rep;
  rep.c0 = c0;
  rep.min_alpha = std::numeric_limits<double>::infinity();
  rep.min_dt_alpha = std::numeric_limits<double>::infinity();
  nt = std::max<std::size_t>(nt, 2);
  const double dt = t_max / static_cast<double>(nt - 1);
  for (std::size_t k = 0; k < nt; ++k) {
    const double t = static_cast<double>(k) * dt;
    for (std::size_t i = 0; i < grid.n(); ++i) {
      const AlphaJet2 j = alpha_eval(d, {t, grid.node(i)});
      rep.min_alpha = std::min(rep.min_alpha, j.alpha);
      rep.min_dt_alpha = std::min(rep.min_dt_alpha, j.dt);
      if (!(j.alpha > 0.0)) rep.alpha_positive = false;
      if (!(j.dt > 0.0)) rep.dt_alpha_positive = false;
      // |dx a| < dt a iff both null derivatives are positive; this is the
      // sufficient condition |a0'| < alpha1 evaluated pointwise and stays
      // sign-exact where the squared form underflows.
      if (!(j.L > 0.0 && j.Lbar > 0.0)) rep.timelike_everywhere = false;
      ++rep.samples;
    }
  }
  rep.uniform_lower_bound = rep.min_alpha > c0;
  return rep;
}

}  // namespace bzwave
