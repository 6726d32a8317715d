#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bzwave/alpha_data.hpp"
#include "bzwave/diagnostics.hpp"
#include "bzwave/evolution.hpp"
#include "bzwave/exact_solutions.hpp"
#include "bzwave/field_state.hpp"

namespace bzwave {

// One scenario = one JSON document. No environment configuration; reruns with
// identical inputs are byte-identical in the CSV bodies.
struct Scenario {
  std::string name;

  enum class Mode { Evolution, Exact } mode = Mode::Evolution;

  AlphaData alpha;

  // Initial data for evolution scenarios.
  double lambda0 = 1.0;
  double c1 = 1.0;
  double epsilon = 0.0;
  ProfilePtr lambda_tilde0, lambda_tilde1, phi0, phi1, f0, f1;

  // Exact family driving exact scenarios, soliton-background evolutions and
  // convergence studies.
  std::string exact_family;  // minkowski | traveling | kasner_background |
                             // kasner_soliton | er_bessel | er_soliton
  KasnerParams kasner;
  SolitonParams soliton;
  ErSolitonParams er_soliton;
  std::optional<TravelingProfiles> traveling;

  // Grid / stepping.
  double x_min = -10.0, x_max = 10.0;
  std::size_t n = 401;
  double t_end = 1.0;
  double cfl = 0.5;
  double guard_fraction = 0.5;
  std::size_t output_stride = 1;

  // Diagnostics.
  Orientation orientation = Orientation::Timelike;
  double delta = 0.25;
  std::vector<VirialConfig> virial_cfgs;

  // Convergence study.
  std::vector<std::size_t> levels{401, 801, 1601};
  double convergence_t = 1.0;
  double solver_order_threshold = 3.5;
  double residual_order_threshold = 1.8;

  // Exact tabulation times.
  std::vector<double> exact_times{1.0};

  std::string raw_json;  // canonical dump, hashed into the manifest

  Grid1D grid() const { return Grid1D(x_min, x_max, n); }
  EvolutionConfig evolution_config() const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

// Builds the t = 0 state: profile perturbations scaled by epsilon on top of
// the flat (or exact-family) background.
FieldState build_initial_state(const Scenario& sc);

// Samples an exact family on the grid at time t as a FieldState (analytic
// time derivatives in the pi/xi/w channels).
FieldState sample_exact_state(const Scenario& sc, const Grid1D& grid, double t,
                              double lambda0);

// The alpha-jet provider matching the scenario family (D'Alembert data, or
// alpha = r for the Einstein-Rosen families).
AlphaJetFn scenario_alpha_fn(const Scenario& sc);

// True for families whose alpha is the radial one.
bool scenario_is_radial(const Scenario& sc);

// FNV-1a hash of the canonical JSON, for the run manifest.
std::string config_hash(const Scenario& sc);

// Shipped reference scenarios, by name.
std::string builtin_scenario_json(const std::string& name);
std::vector<std::string> builtin_scenario_names();

}  // namespace bzwave
