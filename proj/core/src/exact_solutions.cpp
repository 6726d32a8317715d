#include "bzwave/exact_solutions.hpp"

#include <cmath>
#include <memory>

#include "bzwave/bessel.hpp"
#include "bzwave/dual.hpp"
#include "bzwave/errors.hpp"
#include "bzwave/quadrature.hpp"

namespace bzwave {

namespace {

// Derivative profile for alpha1 = dir * l' realized on top of a Gaussian or
// generic profile; only the Gaussian case has the closed-form chain ready, so
// traveling_alpha_data handles the generic case through a small adapter.
class ScaledDerivativeProfile final : public Profile {
 public:
  ScaledDerivativeProfile(ProfilePtr inner, double scale)
      : inner_(std::move(inner)), scale_(scale) {}
  double value(double s) const override { return scale_ * inner_->d1(s); }
  double d1(double s) const override { return scale_ * inner_->d2(s); }
  double d2(double s) const override {
    // Second derivative of the parent's first derivative; approximated by a
    // symmetric difference of d2, adequate for validation sampling only.
    const double h = 1e-4;
    return scale_ * (inner_->d2(s + h) - inner_->d2(s - h)) / (2.0 * h);
  }
  double antiderivative(double s) const override {
    return scale_ * (inner_->value(s) - inner_->value(0.0));
  }
  double support_radius() const override { return inner_->support_radius(); }
  bool compact_support() const override { return inner_->compact_support(); }
  std::string describe() const override {
    return inner_->describe() + "_derivative";
  }

 private:
  ProfilePtr inner_;
  double scale_;
};

Dual2 alpha_dual(const AlphaJet2& j) { return {j.alpha, j.dt, j.dx}; }
Dual2 beta_dual(const BetaJet& b) { return {b.beta, b.dt, b.dx}; }

void extract_from_normalized(const Dual2& gh11, const Dual2& gh12,
                             const Dual2& gh22, Dual2* lambda, Dual2* phi) {
  const Dual2 a = (gh11 - gh22) * Dual2(0.5);
  const Dual2 sh = sqrt(a * a + gh12 * gh12);
  *lambda = asinh(sh);
  Dual2 two_phi = atan2(gh12, a);
  if (two_phi.v < 0.0) two_phi.v += 2.0 * M_PI;
  *phi = two_phi * Dual2(0.5);
}

}  // namespace

ExactEval eval_traveling(const TravelingProfiles& tp, const SpacetimePoint& p) {
  const double dir = tp.direction >= 0 ? 1.0 : -1.0;
  const double s = p.x + dir * p.t;

  ExactEval out;
  out.family = "traveling";
  out.lambda = tp.h_baseline + tp.h->value(s);
  out.lambda_x = tp.h->d1(s);
  out.lambda_t = dir * out.lambda_x;
  out.phi = tp.k->value(s);
  out.phi_x = tp.k->d1(s);
  out.phi_t = dir * out.phi_x;
  out.alpha = 1.0 + tp.l->value(s);
  out.alpha_x = tp.l->d1(s);
  out.alpha_t = dir * out.alpha_x;
  if (!(out.alpha > 0.0))
    throw NonPositiveAlpha("traveling wave: alpha profile reached 0");
  const double f = 1.0 + tp.m->value(s);
  if (!(f > 0.0)) throw NonPositiveF("traveling wave: f profile reached 0");
  out.has_f = true;
  out.v = std::log(f);
  out.v_x = tp.m->d1(s) / f;
  out.v_t = dir * out.v_x;
  out.g = metric_from_fields(out.lambda, out.phi, out.alpha, f);
  out.det_ratio = 1.0;
  return out;
}

AlphaData traveling_alpha_data(const TravelingProfiles& tp) {
  const double dir = tp.direction >= 0 ? 1.0 : -1.0;
  AlphaData d = AlphaData::zero();
  d.alpha0_tilde = tp.l;
  if (!tp.l->is_zero())
    d.alpha1 = std::make_shared<ScaledDerivativeProfile>(tp.l, dir);
  d.test_mode = true;  // sign-indefinite alpha1; not a cosmological datum
  return d;
}

ExactEval eval_kasner_background(const KasnerParams& kp, const AlphaData& d,
                                 const SpacetimePoint& p) {
  const AlphaJet2 a = alpha_eval(d, p);
  if (!(a.alpha > 0.0))
    throw NonPositiveAlpha("kasner background: alpha <= 0");
  ExactEval out;
  out.family = "kasner_background";
  out.alpha = a.alpha;
  out.alpha_t = a.dt;
  out.alpha_x = a.dx;
  const double la = std::log(a.alpha);
  out.lambda = kp.d * la;
  out.lambda_t = kp.d * a.dt / a.alpha;
  out.lambda_x = kp.d * a.dx / a.alpha;
  out.phi = 0.0;
  out.phi_t = out.phi_x = 0.0;
  const double c = 0.5 * (kp.d * kp.d - 1.0);
  out.has_f = true;
  out.v = c * la;
  out.v_t = c * a.dt / a.alpha;
  out.v_x = c * a.dx / a.alpha;
  out.g = metric_from_fields(out.lambda, out.phi, out.alpha, std::exp(out.v));
  out.det_ratio = 1.0;
  return out;
}

ExactEval eval_kasner_soliton(const SolitonParams& sp, const AlphaData& d,
                              const SpacetimePoint& p) {
  const AlphaJet2 aj = alpha_eval(d, p);
  if (!(aj.alpha > 0.0)) throw NonPositiveAlpha("kasner soliton: alpha <= 0");
  const BetaJet bj = beta_eval(d, sp.C_beta, p);

  const Dual2 A = alpha_dual(aj);
  const Dual2 B = beta_dual(bj);
  const Dual2 WB = Dual2(sp.w) - B;
  if (!(WB.v > 0.0) || !(WB.v * WB.v > A.v * A.v))
    throw ComplexPole("kasner soliton: (w - beta)^2 <= alpha^2");

  const Dual2 disc = sqrt(WB * WB - A * A);
  const Dual2 mu = WB - disc;        // minus branch, mu in (0, alpha]
  const Dual2 mu_bar = WB + disc;    // conjugate pole, mu*mu_bar = alpha^2
  const Dual2 m = mu / A;

  const double dk = sp.d;
  const Dual2 md = pow(m, dk);
  const Dual2 mdi = pow(m, -dk);
  const Dual2 mdp = pow(m, dk + 1.0);
  const Dual2 mdpi = pow(m, -dk - 1.0);
  const Dual2 mdm = pow(m, dk - 1.0);
  const Dual2 mdmi = pow(m, -dk + 1.0);
  const Dual2 ad = pow(A, dk);
  const Dual2 adi = pow(A, -dk);

  const Dual2 denom = md + mdi;
  const Dual2 pref = Dual2(2.0) * A / denom;
  const Dual2 g11 = pref * ad * (mdp + mdpi);
  const Dual2 g12 = pref * (Dual2(1.0) / m - m);
  const Dual2 g22 = pref * adi * (mdm + mdmi);

  const Dual2 det_raw = g11 * g22 - g12 * g12;
  const Dual2 norm = sqrt(det_raw) / A;  // sqrt(det/alpha^2); 2 identically
  const Dual2 gh11 = g11 / (norm * A);
  const Dual2 gh12 = g12 / (norm * A);
  const Dual2 gh22 = g22 / (norm * A);

  Dual2 lambda, phi;
  extract_from_normalized(gh11, gh12, gh22, &lambda, &phi);

  ExactEval out;
  out.family = "kasner_soliton";
  out.alpha = aj.alpha;
  out.alpha_t = aj.dt;
  out.alpha_x = aj.dx;
  out.lambda = lambda.v;
  out.lambda_t = lambda.dt;
  out.lambda_x = lambda.dx;
  out.phi = phi.v;
  out.phi_t = phi.dt;
  out.phi_x = phi.dx;
  out.det_ratio = det_raw.v / (aj.alpha * aj.alpha);
  out.cosh_lambda_paper =
      (ad.v * (mdp.v + mdpi.v) + adi.v * (mdm.v + mdmi.v)) / denom.v;
  out.cosh_lambda_normalized = std::cosh(lambda.v);
  out.mu = mu.v;
  out.mu_bar = mu_bar.v;

  double f = 1.0;
  if (sp.with_conformal_factor) {
    // Background f0 = alpha^{(d^2-1)/2} (the Kasner conformal factor), then
    // f = f0 alpha^{1/2} mu cosh(rho) / (alpha^2 - mu^2).
    const Dual2 rho = Dual2(dk) * log(m) + Dual2(sp.C_rho);
    const Dual2 f0 = pow(A, 0.5 * (dk * dk - 1.0));
    const Dual2 fd =
        f0 * sqrt(A) * mu * cosh(rho) / (A * A - mu * mu);
    if (!(fd.v > 0.0)) throw NonPositiveF("kasner soliton: f <= 0");
    out.has_f = true;
    out.v = std::log(fd.v);
    out.v_t = fd.dt / fd.v;
    out.v_x = fd.dx / fd.v;
    f = fd.v;
  }
  out.g = metric_from_fields(out.lambda, out.phi, out.alpha, f);
  return out;
}

ExactEval eval_er_bessel(const SpacetimePoint& p) {
  const double r = p.x;
  if (!(r > 0.0)) throw NonPositiveRadius("einstein-rosen: r must be > 0");
  const double j0 = bessel_j0(r);
  const double j1 = bessel_j1(r);
  ExactEval out;
  out.family = "er_bessel";
  out.lambda = j0 * std::sin(p.t);
  out.lambda_t = j0 * std::cos(p.t);
  out.lambda_x = -j1 * std::sin(p.t);  // J0' = -J1
  out.phi = 0.0;
  out.phi_t = out.phi_x = 0.0;
  out.alpha = r;
  out.alpha_t = 0.0;
  out.alpha_x = 1.0;
  // Lambda may be negative; the block alpha*diag(e^L, e^-L) is still the
  // (diag1) form with phi = 0 once Lambda is folded to >= 0 by a rotation,
  // so build the block directly.
  const double el = std::exp(out.lambda);
  out.g.g11 = r * el;
  out.g.g22 = r / el;
  out.g.g12 = 0.0;
  out.g.f = 1.0;
  out.det_ratio = 1.0;
  return out;
}

namespace {

struct ErClosed {
  Dual2 mu, gamma_tilde, u0;
};

Dual2 er_u0(ErSeedMode mode, double t, double r) {
  if (mode == ErSeedMode::Zero) return Dual2(0.0);
  const double j0 = bessel_j0(r);
  const double j1 = bessel_j1(r);
  return {j0 * std::sin(t), j0 * std::cos(t), -j1 * std::sin(t)};
}

void er_rho_gradient(const ErSolitonParams& prm, double t, double r,
                     double* rho_t, double* rho_r) {
  const Dual2 u0 = er_u0(prm.seed, t, r);
  const double wt = prm.w - t;
  const double disc2 = wt * wt - r * r;
  if (!(disc2 > 0.0))
    throw PoleCrossing("er soliton: path meets mu^2 = r^2");
  const double sq = std::sqrt(disc2);
  const double mu = wt + (prm.branch >= 0 ? sq : -sq);
  const double den = mu * mu - r * r;
  if (den == 0.0) throw PoleCrossing("er soliton: mu^2 = r^2");
  *rho_t = r / den * (r * u0.dt + mu * u0.dx);
  *rho_r = r / den * (r * u0.dx + mu * u0.dt);
}

ErClosed er_closed(const ErSolitonParams& prm, double t, double r) {
  ErClosed out;
  out.u0 = er_u0(prm.seed, t, r);
  const Dual2 wt = Dual2(prm.w) - Dual2(t, 1.0, 0.0);
  const Dual2 rr(r, 0.0, 1.0);
  const Dual2 disc2 = wt * wt - rr * rr;
  if (!(disc2.v > 0.0)) throw ComplexPole("er soliton: (w-t)^2 <= r^2");
  if (!(wt.v > 0.0))
    throw ComplexPole("er soliton: requires w - t >= r > 0");
  const Dual2 sq = sqrt(disc2);
  out.mu = prm.branch >= 0 ? wt + sq : wt - sq;
  // gamma_tilde = ln(r/|mu|) -/+ arccosh((w-t)/r), sign tied to the branch.
  const Dual2 ach = acosh(wt / rr);
  out.gamma_tilde = log(rr / out.mu) +
                    (prm.branch >= 0 ? -ach : ach);
  return out;
}

}  // namespace

ErSolitonEval eval_er_soliton(const ErSolitonParams& prm,
                              const SpacetimePoint& p) {
  if (!(p.x > 0.0)) throw NonPositiveRadius("er soliton: r must be > 0");
  if (!(prm.base.x > 0.0))
    throw NonPositiveRadius("er soliton: base r must be > 0");

  // rho by line integral of its closed-form gradient along an axis-aligned
  // path; adaptive quadrature on each leg.
  auto leg_t = [&prm](double r_fixed, double t0, double t1) {
    return integrate_adaptive(
        [&prm, r_fixed](double t) {
          double rt, rr;
          er_rho_gradient(prm, t, r_fixed, &rt, &rr);
          return rt;
        },
        t0, t1, 1e-11);
  };
  auto leg_r = [&prm](double t_fixed, double r0, double r1) {
    return integrate_adaptive(
        [&prm, t_fixed](double r) {
          double rt, rr;
          er_rho_gradient(prm, t_fixed, r, &rt, &rr);
          return rr;
        },
        r0, r1, 1e-11);
  };

  double rho = prm.rho0;
  if (prm.integrate_r_first) {
    rho += leg_r(prm.base.t, prm.base.x, p.x);
    rho += leg_t(p.x, prm.base.t, p.t);
  } else {
    rho += leg_t(prm.base.x, prm.base.t, p.t);
    rho += leg_r(p.t, prm.base.x, p.x);
  }

  double rho_t, rho_r;
  er_rho_gradient(prm, p.t, p.x, &rho_t, &rho_r);
  const Dual2 rho_d(rho, rho_t, rho_r);

  const ErClosed cl = er_closed(prm, p.t, p.x);
  const Dual2 gamma = Dual2(prm.K) + cl.u0 + Dual2(2.0) * rho_d +
                      cl.gamma_tilde;

  const Dual2 rr(p.x, 0.0, 1.0);
  const Dual2 eu = exp(cl.u0);
  const Dual2 chg = cosh(gamma);
  const Dual2 g11 = rr * rr * eu * cosh(gamma + cl.gamma_tilde) / (cl.mu * chg);
  const Dual2 g22 = cosh(gamma - cl.gamma_tilde) / (eu * cl.mu * chg);
  const Dual2 g12 = (rr * rr - cl.mu * cl.mu) /
                    (Dual2(2.0) * cl.mu * cl.mu * chg);

  const Dual2 det_raw = g11 * g22 - g12 * g12;
  if (!(det_raw.v > 0.0))
    throw NotPositiveDefinite("er soliton: metric block not positive definite");
  const Dual2 alpha_n = sqrt(det_raw);
  const Dual2 gh11 = g11 / alpha_n;
  const Dual2 gh12 = g12 / alpha_n;
  const Dual2 gh22 = g22 / alpha_n;

  Dual2 lambda, phi;
  extract_from_normalized(gh11, gh12, gh22, &lambda, &phi);

  ErSolitonEval out;
  out.rho = rho;
  out.fields.family = "er_soliton";
  out.fields.lambda = lambda.v;
  out.fields.lambda_t = lambda.dt;
  out.fields.lambda_x = lambda.dx;
  out.fields.phi = phi.v;
  out.fields.phi_t = phi.dt;
  out.fields.phi_x = phi.dx;
  out.fields.alpha = alpha_n.v;
  out.fields.alpha_t = alpha_n.dt;
  out.fields.alpha_x = alpha_n.dx;
  out.fields.det_ratio = det_raw.v / (p.x * p.x);
  out.fields.mu = cl.mu.v;
  out.fields.mu_bar = (p.x * p.x) / cl.mu.v;

  out.fields.g = metric_from_fields(lambda.v, phi.v, alpha_n.v);
  out.diag1_consistency =
      std::max({std::abs(out.fields.g.g11 - gh11.v * alpha_n.v),
                std::abs(out.fields.g.g12 - gh12.v * alpha_n.v),
                std::abs(out.fields.g.g22 - gh22.v * alpha_n.v)});

  // Path-independence witness: cross derivatives of the closed-form gradient.
  const double h = 1e-5 * std::max(1.0, std::abs(p.x));
  double rtp, rrp, rtm, rrm;
  er_rho_gradient(prm, p.t, p.x + h, &rtp, &rrp);
  er_rho_gradient(prm, p.t, p.x - h, &rtm, &rrm);
  const double drho_t_dr = (rtp - rtm) / (2.0 * h);
  er_rho_gradient(prm, p.t + h, p.x, &rtp, &rrp);
  er_rho_gradient(prm, p.t - h, p.x, &rtm, &rrm);
  const double drho_r_dt = (rrp - rrm) / (2.0 * h);
  out.cross_derivative_residual = std::abs(drho_t_dr - drho_r_dt);
  return out;
}

}  // namespace bzwave
