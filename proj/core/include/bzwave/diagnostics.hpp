#pragma once

#include <cstddef>
#include <vector>

#include "bzwave/alpha_data.hpp"
#include "bzwave/evolution.hpp"
#include "bzwave/field_state.hpp"
#include "bzwave/geometry.hpp"

namespace bzwave {

enum class Orientation { Timelike, Spacelike, Raw };

// Energy/momentum densities at a point. Raw (e, p) carry the alpha terms of
// the full definitions; (e_tilde, p_tilde) drop them; the hat pair is the
// orientation-corrected one (timelike: e_hat = -e_tilde, p_hat = p_tilde;
// spacelike: e_hat = p_tilde, p_hat = e_tilde).
struct DensitySample {
  double h1 = 0.0;
  double h2 = 0.0;
  double e = 0.0, p = 0.0;
  double e_tilde = 0.0, p_tilde = 0.0;
  double e_hat = 0.0, p_hat = 0.0;
  double kappa = 0.0;
  GradientClass grad_class = GradientClass::Null;
  bool applicable = false;  // false on null-gradient points
};

// All density values are assembled in the null-factored form
//   e_tilde = -alpha (wbar/Lbar_a + w/L_a),  p_tilde = alpha (w/L_a - wbar/Lbar_a),
// with w = (L Lam)^2/2 + 2 sinh^2(Lam) (L phi)^2 and wbar its Lbar mirror,
// which is algebraically identical to the kappa form but free of the
// h1 - 2 h2 cancellation that the huge kappa would amplify.
DensitySample density_sample(const FirstJet& lambda_jet, const FirstJet& phi_jet,
                             const AlphaJet2& a);

// Per-node samples over a state; time derivatives from the stored pi/xi
// channels, spatial from 4th-order differences.
std::vector<DensitySample> density_field(const FieldState& state,
                                         const AlphaJetFn& alpha,
                                         const Grid1D& grid);

struct ModifiedEnergy {
  double E = 0.0;       // -int kappa dt(alpha) (h1 - 2 h2) dx
  double E_hat = 0.0;   // int e_hat dx (they differ where h2 dx(alpha) != 0)
  bool conditions_ok = true;  // cosmological conditions on the slice
  double excluded_measure = 0.0;  // total weight of null-gradient nodes
};

ModifiedEnergy modified_energy(const FieldState& state, const AlphaJetFn& alpha,
                               const Grid1D& grid);

struct ContinuityResiduals {
  double linf1 = 0.0, l2_1 = 0.0;  // first identity
  double linf2 = 0.0, l2_2 = 0.0;  // second identity
  std::size_t nodes_used = 0;
};

// Residuals of the continuity identities from three consecutive snapshots;
// outer time derivatives by centered differences of the density arrays.
ContinuityResiduals continuity_residuals(const FieldState& sm,
                                         const FieldState& s0,
                                         const FieldState& sp,
                                         const AlphaJetFn& alpha,
                                         const Grid1D& grid,
                                         Orientation orientation);

struct WeightedNorms {
  double lambda_k0 = 0.0;  // E_0
  double lambda_k1 = 0.0;  // E_1
  double phi_k0 = 0.0;     // Ebar_0
  double phi_k1 = 0.0;     // Ebar_1

  double lambda_total() const { return lambda_k0 + lambda_k1; }
  double phi_total() const { return phi_k0 + phi_k1; }
};

WeightedNorms weighted_norms(const FieldState& state, const Grid1D& grid,
                             double delta);

struct FluxNorms {
  double F = 0.0;     // sup over null lines, Lambda channel, k = 0 and 1
  double Fbar = 0.0;  // phi channel
};

// Discrete max over grid-aligned characteristics of the null-line integrals;
// a lower bound on the continuum sup. One entry per snapshot.
std::vector<FluxNorms> flux_norms_series(const Trajectory& traj, double delta);
FluxNorms flux_norms(const Trajectory& traj, double delta);

struct VirialConfig {
  double v = 0.0;  // |v| < 1
  enum class Weight { Constant, LogWindow } weight = Weight::LogWindow;
  double omega0 = 5.0;  // used by the constant mode
};

// omega(t); the log window continues constantly below t = 2 to avoid the
// log^2 singularity.
double virial_omega(const VirialConfig& cfg, double t);
double virial_omega_ratio(const VirialConfig& cfg, double t);  // omega'/omega

// I(t) = -int tanh((x - v t)/omega(t)) p_hat dx over applicable nodes.
double virial(const FieldState& state, const AlphaJetFn& alpha,
              const Grid1D& grid, const VirialConfig& cfg);

struct VirialRate {
  double measured = 0.0;  // centered dI/dt
  double identity = 0.0;  // (omega'/omega) int z rho' p_hat + (v/omega) int rho' p_hat
                          // + (1/omega) int rho' e_hat
  double mismatch = 0.0;
};

VirialRate virial_rate_check(const FieldState& sm, const FieldState& s0,
                             const FieldState& sp, const AlphaJetFn& alpha,
                             const Grid1D& grid, const VirialConfig& cfg);

struct WindowedDecay {
  double field_form = 0.0;  // sech^2 window on the field quadratic form
  double detg_form = 0.0;   // sech^2 window on (d det g)^2, det g = alpha^2
};

WindowedDecay windowed_decay(const FieldState& state, const AlphaJetFn& alpha,
                             const Grid1D& grid, const VirialConfig& cfg);

// Time series of every diagnostic over a trajectory.
struct DiagnosticsSeries {
  std::vector<double> times;
  std::vector<double> E;
  std::vector<double> E_hat;
  std::vector<std::vector<double>> I;               // per virial config
  std::vector<std::vector<double>> windowed_field;  // per virial config
  std::vector<std::vector<double>> windowed_detg;
  std::vector<double> energy_k0, energy_k1;  // weighted norms, Lambda
  std::vector<double> energy_phi_k0, energy_phi_k1;
  std::vector<double> flux_F, flux_Fbar;
  std::vector<double> cont_linf, cont_l2;  // first-identity residuals
};

DiagnosticsSeries diagnostics_series(const Trajectory& traj,
                                     const AlphaJetFn& alpha, double delta,
                                     const std::vector<VirialConfig>& cfgs,
                                     Orientation orientation);

}  // namespace bzwave
