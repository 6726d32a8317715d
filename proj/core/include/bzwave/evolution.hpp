#pragma once

#include <functional>
#include <vector>

#include "bzwave/alpha_data.hpp"
#include "bzwave/field_state.hpp"
#include "bzwave/geometry.hpp"
#include "bzwave/profiles.hpp"

namespace bzwave {

// Analytic alpha-jet provider; lets the residual operators run on D'Alembert
// data, the cylindrical choice alpha = r, or a constant alpha alike.
using AlphaJetFn = std::function<AlphaJet2(const SpacetimePoint&)>;

AlphaJetFn make_alpha_fn(const AlphaData& d);
AlphaJetFn radial_alpha_fn();
AlphaJetFn constant_alpha_fn(double value);

// Background values of the dynamical channels, for runs riding on a
// non-trivial exact background (the perturbed soliton); the boundary
// contamination check and the causal-padding rule measure deviations from it.
struct BackgroundSlice {
  double lambda_tilde = 0.0;
  double pi = 0.0;
  double phi = 0.0;
  double xi = 0.0;
};

using BackgroundFn = std::function<BackgroundSlice(const SpacetimePoint&)>;

struct EvolutionConfig {
  Grid1D grid;
  double t_end = 1.0;
  double cfl = 0.5;  // dt = cfl * dx
  double lambda0 = 1.0;
  double guard_fraction = 0.5;  // enforce |Lambda| >= guard_fraction*lambda0
  std::size_t output_stride = 1;
  BackgroundFn background;  // empty: zero background
};

struct ResidualReport {
  double linf_lambda = 0.0;
  double l2_lambda = 0.0;
  double linf_phi = 0.0;
  double l2_phi = 0.0;
  double linf_alpha = 0.0;
  double linf_f = 0.0;
};

// Time derivative of the first-order system at one level.
struct StateDerivative {
  std::vector<double> d_lambda_tilde;
  std::vector<double> d_pi;
  std::vector<double> d_phi;
  std::vector<double> d_xi;
  std::vector<double> d_v;
  std::vector<double> d_w;
};

// 4th-order centered differences in the interior, one-sided at the two
// outermost nodes on each side.
std::vector<double> derivative1(const std::vector<double>& f, double dx);
std::vector<double> derivative2(const std::vector<double>& f, double dx);

// Right-hand side of the quasilinear system in non-divergence form.
// Throws LambdaDegenerate when the guard is violated.
StateDerivative rhs(const FieldState& state, const AlphaData& d,
                    const Grid1D& grid, double t, double guard_fraction);

// Source G of the ln f wave equation, evaluated from the state's stored time
// derivatives; the alpha part uses the exact null factorization
// (dt a)^2-(dx a)^2 = L a * Lbar a.
std::vector<double> source_g(const FieldState& state, const AlphaData& d,
                             const Grid1D& grid, double t);

FieldState step_rk4(const FieldState& state, const AlphaData& d,
                    const Grid1D& grid, double dt, double cfl,
                    double guard_fraction);

struct Trajectory {
  explicit Trajectory(const Grid1D& g) : grid(g) {}
  Grid1D grid;
  double lambda0 = 1.0;
  double dt = 0.0;       // solver step
  double dt_snap = 0.0;  // uniform snapshot spacing
  std::size_t steps = 0;
  std::vector<FieldState> snapshots;
  std::vector<std::vector<double>> stored_g;  // G per snapshot
};

// Deterministic method-of-lines run; snapshots at uniform strides (the final
// time always included). Throws LambdaDegenerate / BoundaryContamination /
// ConfigError (domain rule).
Trajectory run_simulation(const EvolutionConfig& config, const AlphaData& d,
                          const FieldState& initial);

// Discrete divergence-form residuals from three consecutive snapshots; time
// derivatives come from centered/staggered differences of the stored fields,
// never from the solver right-hand side. Norms over interior nodes.
ResidualReport pde_residual(const FieldState& sm, const FieldState& s0,
                            const FieldState& sp, const AlphaJetFn& alpha,
                            const Grid1D& grid);

// D'Alembert reconstruction of ln f at p from initial data (f0, f1, c1) and
// the trajectory's stored G, by iterated composite Simpson over the backward
// light triangle. Requires ||f0||_inf <= c1/2 and p inside the causal diamond.
double lnf_quadrature(const AlphaData& d, const Trajectory& traj,
                      const SpacetimePoint& p, const Profile& f0,
                      const Profile& f1, double c1);

}  // namespace bzwave
