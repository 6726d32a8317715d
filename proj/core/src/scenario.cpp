#include "bzwave/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bzwave/errors.hpp"

namespace bzwave {

using json = nlohmann::json;

namespace {

ProfilePtr profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("profile spec needs a 'family' field");
  const std::string family = j.at("family").get<std::string>();
  auto num = [&j](const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
  };
  if (family == "zero") return std::make_shared<ZeroProfile>();
  if (family == "gaussian")
    return std::make_shared<GaussianProfile>(num("amplitude", 1.0),
                                             num("width", 1.0),
                                             num("center", 0.0));
  if (family == "gaussian_prime")
    return std::make_shared<GaussianPrimeProfile>(num("amplitude", 1.0),
                                                  num("width", 1.0),
                                                  num("center", 0.0));
  if (family == "sech2")
    return std::make_shared<Sech2Profile>(num("amplitude", 1.0),
                                          num("width", 1.0),
                                          num("center", 0.0));
  if (family == "bump")
    return std::make_shared<BumpProfile>(num("amplitude", 1.0),
                                         num("radius", 1.0),
                                         num("center", 0.0));
  if (family == "constant")
    return std::make_shared<ConstantProfile>(num("value", 0.0));
  if (family == "tabulated") {
    if (!j.contains("file"))
      throw ConfigError("tabulated profile needs a 'file' field");
    return load_tabulated_csv(j.at("file").get<std::string>());
  }
  throw ConfigError("unknown profile family: " + family);
}

ProfilePtr profile_or_zero(const json& parent, const char* key) {
  if (!parent.contains(key)) return std::make_shared<ZeroProfile>();
  return profile_from_json(parent.at(key));
}

}  // namespace

EvolutionConfig Scenario::evolution_config() const {
  EvolutionConfig cfg{grid(), t_end, cfl, lambda0, guard_fraction,
                      output_stride, BackgroundFn{}};
  return cfg;
}

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid scenario JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");

  Scenario sc;
  try {
    sc.name = j.at("name").get<std::string>();
    if (j.contains("mode")) {
      const std::string m = j.at("mode").get<std::string>();
      if (m == "evolution")
        sc.mode = Scenario::Mode::Evolution;
      else if (m == "exact")
        sc.mode = Scenario::Mode::Exact;
      else
        throw ConfigError("mode must be 'evolution' or 'exact'");
    }

    if (j.contains("alpha")) {
      const json& a = j.at("alpha");
      sc.alpha.alpha0_tilde = profile_or_zero(a, "alpha0_tilde");
      sc.alpha.alpha1 = profile_or_zero(a, "alpha1");
      if (a.contains("gamma")) sc.alpha.gamma = a.at("gamma").get<double>();
      if (a.contains("K1")) sc.alpha.K1 = a.at("K1").get<double>();
      if (a.contains("K2")) sc.alpha.K2 = a.at("K2").get<double>();
      if (a.contains("delta")) sc.alpha.delta = a.at("delta").get<double>();
      if (a.contains("test_mode"))
        sc.alpha.test_mode = a.at("test_mode").get<bool>();
      if (!(sc.alpha.delta > 0.0 && sc.alpha.delta < 1.0 / 3.0))
        throw ConfigError("alpha.delta must lie in (0, 1/3)");
    } else {
      sc.alpha = AlphaData::zero();
    }

    if (j.contains("initial")) {
      const json& in = j.at("initial");
      if (in.contains("lambda0")) sc.lambda0 = in.at("lambda0").get<double>();
      if (in.contains("c1")) sc.c1 = in.at("c1").get<double>();
      if (in.contains("epsilon")) sc.epsilon = in.at("epsilon").get<double>();
      sc.lambda_tilde0 = profile_or_zero(in, "lambda_tilde0");
      sc.lambda_tilde1 = profile_or_zero(in, "lambda_tilde1");
      sc.phi0 = profile_or_zero(in, "phi0");
      sc.phi1 = profile_or_zero(in, "phi1");
      sc.f0 = profile_or_zero(in, "f0");
      sc.f1 = profile_or_zero(in, "f1");
      if (!(sc.lambda0 > 0.0)) throw ConfigError("initial.lambda0 must be > 0");
      if (!(sc.c1 > 0.0)) throw ConfigError("initial.c1 must be > 0");
      if (sc.epsilon < 0.0) throw ConfigError("initial.epsilon must be >= 0");
    } else {
      const auto zero = std::make_shared<ZeroProfile>();
      sc.lambda_tilde0 = sc.lambda_tilde1 = sc.phi0 = sc.phi1 = sc.f0 =
          sc.f1 = zero;
    }

    sc.exact_family = "minkowski";
    if (j.contains("exact")) {
      const json& e = j.at("exact");
      sc.exact_family = e.at("family").get<std::string>();
      if (e.contains("d")) {
        sc.kasner.d = e.at("d").get<double>();
        sc.soliton.d = sc.kasner.d;
      }
      if (e.contains("w")) sc.soliton.w = e.at("w").get<double>();
      if (e.contains("C_beta"))
        sc.soliton.C_beta = e.at("C_beta").get<double>();
      if (e.contains("C_rho")) sc.soliton.C_rho = e.at("C_rho").get<double>();
      if (e.contains("times"))
        sc.exact_times = e.at("times").get<std::vector<double>>();
      if (e.contains("traveling")) {
        const json& tw = e.at("traveling");
        TravelingProfiles tp;
        tp.h = profile_or_zero(tw, "h");
        tp.k = profile_or_zero(tw, "k");
        tp.l = profile_or_zero(tw, "l");
        tp.m = profile_or_zero(tw, "m");
        if (tw.contains("h_baseline"))
          tp.h_baseline = tw.at("h_baseline").get<double>();
        if (tw.contains("direction"))
          tp.direction = tw.at("direction").get<int>();
        sc.traveling = tp;
      }
      if (e.contains("er")) {
        const json& er = e.at("er");
        if (er.contains("w")) sc.er_soliton.w = er.at("w").get<double>();
        if (er.contains("K")) sc.er_soliton.K = er.at("K").get<double>();
        if (er.contains("branch"))
          sc.er_soliton.branch = er.at("branch").get<int>();
        if (er.contains("seed"))
          sc.er_soliton.seed = er.at("seed").get<std::string>() == "zero"
                                   ? ErSeedMode::Zero
                                   : ErSeedMode::Bessel;
      }
      if (sc.exact_family == "kasner_background" ||
          sc.exact_family == "kasner_soliton") {
        if (!(sc.kasner.d >= 1.0))
          throw ConfigError("kasner parameter d must be >= 1");
      }
    }
    if (sc.exact_family == "traveling") {
      if (!sc.traveling)
        throw ConfigError("traveling family needs exact.traveling profiles");
      sc.alpha = traveling_alpha_data(*sc.traveling);
      sc.lambda0 = sc.traveling->h_baseline;
    }

    if (j.contains("evolution")) {
      const json& ev = j.at("evolution");
      if (ev.contains("x_min")) sc.x_min = ev.at("x_min").get<double>();
      if (ev.contains("x_max")) sc.x_max = ev.at("x_max").get<double>();
      if (ev.contains("n")) sc.n = ev.at("n").get<std::size_t>();
      if (ev.contains("t_end")) sc.t_end = ev.at("t_end").get<double>();
      if (ev.contains("cfl")) sc.cfl = ev.at("cfl").get<double>();
      if (ev.contains("guard_fraction"))
        sc.guard_fraction = ev.at("guard_fraction").get<double>();
      if (ev.contains("output_stride"))
        sc.output_stride = ev.at("output_stride").get<std::size_t>();
      if (!(sc.cfl > 0.0 && sc.cfl <= 0.9))
        throw ConfigError("evolution.cfl must lie in (0, 0.9]");
      if (!(sc.t_end > 0.0)) throw ConfigError("evolution.t_end must be > 0");
    }

    if (j.contains("diagnostics")) {
      const json& dg = j.at("diagnostics");
      if (dg.contains("orientation")) {
        const std::string o = dg.at("orientation").get<std::string>();
        if (o == "timelike")
          sc.orientation = Orientation::Timelike;
        else if (o == "spacelike")
          sc.orientation = Orientation::Spacelike;
        else if (o == "raw")
          sc.orientation = Orientation::Raw;
        else
          throw ConfigError("orientation must be timelike|spacelike|raw");
      }
      if (dg.contains("delta")) sc.delta = dg.at("delta").get<double>();
      if (dg.contains("virial")) {
        sc.virial_cfgs.clear();
        for (const json& vc : dg.at("virial")) {
          VirialConfig cfg;
          cfg.v = vc.at("v").get<double>();
          if (!(std::abs(cfg.v) < 1.0))
            throw ConfigError("virial velocity must satisfy |v| < 1");
          if (vc.contains("weight")) {
            const std::string w = vc.at("weight").get<std::string>();
            cfg.weight = w == "constant" ? VirialConfig::Weight::Constant
                                         : VirialConfig::Weight::LogWindow;
          }
          if (vc.contains("omega0")) cfg.omega0 = vc.at("omega0").get<double>();
          sc.virial_cfgs.push_back(cfg);
        }
      }
    }
    if (sc.virial_cfgs.empty()) sc.virial_cfgs.push_back(VirialConfig{});

    if (j.contains("convergence")) {
      const json& cv = j.at("convergence");
      if (cv.contains("levels"))
        sc.levels = cv.at("levels").get<std::vector<std::size_t>>();
      if (cv.contains("t")) sc.convergence_t = cv.at("t").get<double>();
      if (cv.contains("solver_order_threshold"))
        sc.solver_order_threshold =
            cv.at("solver_order_threshold").get<double>();
      if (cv.contains("residual_order_threshold"))
        sc.residual_order_threshold =
            cv.at("residual_order_threshold").get<double>();
      if (sc.levels.size() < 2)
        throw ConfigError("convergence.levels needs at least 2 entries");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario schema error: ") + e.what());
  }

  sc.raw_json = j.dump();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    // Bare built-in names resolve to the shipped reference scenarios.
    const std::string builtin = builtin_scenario_json(path);
    if (!builtin.empty()) return parse_scenario(builtin);
    throw ConfigError("cannot open scenario file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

FieldState build_initial_state(const Scenario& sc) {
  const Grid1D grid = sc.grid();
  FieldState s = FieldState::zeros(grid.n(), sc.lambda0, 0.0);

  if (sc.mode == Scenario::Mode::Evolution &&
      (sc.exact_family == "kasner_soliton" || sc.exact_family == "traveling")) {
    s = sample_exact_state(sc, grid, 0.0, sc.lambda0);
  } else {
    for (std::size_t i = 0; i < grid.n(); ++i) {
      const double x = grid.node(i);
      const double f0 = sc.f0->value(x);
      s.v[i] = std::log(sc.c1 + f0);
      s.w[i] = sc.f1->value(x) / (sc.c1 + f0);
    }
  }

  if (sc.epsilon > 0.0) {
    for (std::size_t i = 0; i < grid.n(); ++i) {
      const double x = grid.node(i);
      s.lambda_tilde[i] += sc.epsilon * sc.lambda_tilde0->value(x);
      s.pi[i] += sc.epsilon * sc.lambda_tilde1->value(x);
      s.phi[i] += sc.epsilon * sc.phi0->value(x);
      s.xi[i] += sc.epsilon * sc.phi1->value(x);
    }
  }
  return s;
}

FieldState sample_exact_state(const Scenario& sc, const Grid1D& grid, double t,
                              double lambda0) {
  FieldState s = FieldState::zeros(grid.n(), lambda0, t);
  for (std::size_t i = 0; i < grid.n(); ++i) {
    const SpacetimePoint p{t, grid.node(i)};
    ExactEval ev;
    if (sc.exact_family == "minkowski") {
      continue;  // zeros
    } else if (sc.exact_family == "traveling") {
      ev = eval_traveling(*sc.traveling, p);
    } else if (sc.exact_family == "kasner_background") {
      ev = eval_kasner_background(sc.kasner, sc.alpha, p);
    } else if (sc.exact_family == "kasner_soliton") {
      ev = eval_kasner_soliton(sc.soliton, sc.alpha, p);
    } else if (sc.exact_family == "er_bessel") {
      ev = eval_er_bessel(p);
    } else if (sc.exact_family == "er_soliton") {
      ev = eval_er_soliton(sc.er_soliton, p).fields;
    } else {
      throw ConfigError("unknown exact family: " + sc.exact_family);
    }
    s.lambda_tilde[i] = ev.lambda - lambda0;
    s.pi[i] = ev.lambda_t;
    s.phi[i] = ev.phi;
    s.xi[i] = ev.phi_t;
    if (ev.has_f) {
      s.v[i] = ev.v;
      s.w[i] = ev.v_t;
    }
  }
  return s;
}

AlphaJetFn scenario_alpha_fn(const Scenario& sc) {
  if (scenario_is_radial(sc)) return radial_alpha_fn();
  return make_alpha_fn(sc.alpha);
}

bool scenario_is_radial(const Scenario& sc) {
  return sc.exact_family == "er_bessel" || sc.exact_family == "er_soliton";
}

std::string config_hash(const Scenario& sc) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : sc.raw_json) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const char* kMinkowski = R"json({
  "name": "minkowski",
  "mode": "evolution",
  "alpha": {"alpha0_tilde": {"family": "zero"}, "alpha1": {"family": "zero"}},
  "initial": {"lambda0": 1.0, "c1": 1.0, "epsilon": 0.0},
  "exact": {"family": "minkowski"},
  "evolution": {"x_min": -10.0, "x_max": 10.0, "n": 401, "t_end": 2.0,
                "cfl": 0.5, "output_stride": 10},
  "diagnostics": {"orientation": "raw", "delta": 0.25,
                  "virial": [{"v": 0.0, "weight": "constant", "omega0": 5.0}]}
})json";

const char* kTravelingWave = R"json({
  "name": "traveling_wave",
  "mode": "evolution",
  "exact": {"family": "traveling",
            "traveling": {"h": {"family": "gaussian", "amplitude": 0.1, "width": 0.5},
                          "k": {"family": "gaussian", "amplitude": 0.08, "width": 0.6},
                          "l": {"family": "gaussian", "amplitude": 0.05, "width": 0.7},
                          "m": {"family": "gaussian", "amplitude": 0.1, "width": 0.5},
                          "h_baseline": 1.0, "direction": -1}},
  "initial": {"lambda0": 1.0, "c1": 1.0, "epsilon": 0.0},
  "evolution": {"x_min": -12.0, "x_max": 12.0, "n": 401, "t_end": 1.0,
                "cfl": 0.5, "output_stride": 5},
  "diagnostics": {"orientation": "raw", "delta": 0.25,
                  "virial": [{"v": 0.0, "weight": "constant", "omega0": 5.0}]},
  "convergence": {"levels": [401, 801, 1601], "t": 1.0}
})json";

const char* kSmallDataGaussian = R"json({
  "name": "smalldata_gaussian",
  "mode": "evolution",
  "alpha": {"alpha0_tilde": {"family": "zero"},
            "alpha1": {"family": "gaussian", "amplitude": 0.01, "width": 4.0},
            "gamma": 0.05, "K1": 5.0, "K2": 5.0, "delta": 0.25},
  "initial": {"lambda0": 1.0, "c1": 1.0, "epsilon": 0.001,
              "lambda_tilde0": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
              "lambda_tilde1": {"family": "zero"},
              "phi0": {"family": "gaussian", "amplitude": 0.5, "width": 1.0},
              "phi1": {"family": "zero"},
              "f0": {"family": "gaussian", "amplitude": 0.2, "width": 1.0},
              "f1": {"family": "zero"}},
  "exact": {"family": "minkowski"},
  "evolution": {"x_min": -62.0, "x_max": 62.0, "n": 2001, "t_end": 50.0,
                "cfl": 0.5, "output_stride": 20},
  "diagnostics": {"orientation": "timelike", "delta": 0.25,
                  "virial": [{"v": 0.0, "weight": "log"},
                              {"v": 0.3, "weight": "log"},
                              {"v": 0.6, "weight": "log"}]}
})json";

const char* kKasnerBackground = R"json({
  "name": "kasner_background",
  "mode": "exact",
  "alpha": {"alpha0_tilde": {"family": "zero"},
            "alpha1": {"family": "gaussian", "amplitude": 0.01, "width": 1.0},
            "gamma": 0.05, "K1": 5.0, "K2": 5.0, "delta": 0.25},
  "exact": {"family": "kasner_background", "d": 2.0, "times": [1.0]},
  "evolution": {"x_min": -3.0, "x_max": 3.0, "n": 401, "t_end": 1.0, "cfl": 0.5},
  "diagnostics": {"orientation": "timelike", "delta": 0.25,
                  "virial": [{"v": 0.3, "weight": "constant", "omega0": 2.0}]},
  "convergence": {"levels": [401, 801, 1601], "t": 1.0}
})json";

const char* kKasnerSoliton = R"json({
  "name": "kasner_soliton",
  "mode": "exact",
  "alpha": {"alpha0_tilde": {"family": "zero"},
            "alpha1": {"family": "gaussian", "amplitude": 0.01, "width": 1.0},
            "gamma": 0.05, "K1": 5.0, "K2": 5.0, "delta": 0.25},
  "exact": {"family": "kasner_soliton", "d": 1.0, "w": 3.0, "C_beta": 0.0,
            "times": [1.0]},
  "evolution": {"x_min": -3.0, "x_max": 3.0, "n": 401, "t_end": 1.0, "cfl": 0.5},
  "diagnostics": {"orientation": "timelike", "delta": 0.25,
                  "virial": [{"v": 0.3, "weight": "constant", "omega0": 2.0}]},
  "convergence": {"levels": [401, 801, 1601], "t": 1.0}
})json";

const char* kKasnerSolitonPerturbed = R"json({
  "name": "kasner_soliton_perturbed",
  "mode": "evolution",
  "alpha": {"alpha0_tilde": {"family": "zero"},
            "alpha1": {"family": "gaussian", "amplitude": 0.01, "width": 4.0},
            "gamma": 0.05, "K1": 5.0, "K2": 5.0, "delta": 0.25},
  "initial": {"lambda0": 2.0634, "c1": 1.0, "epsilon": 0.001,
              "lambda_tilde0": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
              "lambda_tilde1": {"family": "zero"},
              "phi0": {"family": "gaussian", "amplitude": 0.5, "width": 1.0},
              "phi1": {"family": "zero"}},
  "exact": {"family": "kasner_soliton", "d": 1.0, "w": 4.0, "C_beta": 0.0},
  "evolution": {"x_min": -40.0, "x_max": 40.0, "n": 1601, "t_end": 20.0,
                "cfl": 0.5, "output_stride": 20},
  "diagnostics": {"orientation": "timelike", "delta": 0.25,
                  "virial": [{"v": 0.0, "weight": "log"}]}
})json";

const char* kErBessel = R"json({
  "name": "er_bessel",
  "mode": "exact",
  "exact": {"family": "er_bessel", "times": [1.0]},
  "evolution": {"x_min": 0.5, "x_max": 6.5, "n": 401, "t_end": 1.0, "cfl": 0.5},
  "diagnostics": {"orientation": "spacelike", "delta": 0.25,
                  "virial": [{"v": 0.0, "weight": "constant", "omega0": 2.0}]},
  "convergence": {"levels": [401, 801, 1601], "t": 1.0}
})json";

}  // namespace

std::string builtin_scenario_json(const std::string& name) {
  if (name == "minkowski") return kMinkowski;
  if (name == "traveling_wave") return kTravelingWave;
  if (name == "smalldata_gaussian") return kSmallDataGaussian;
  if (name == "kasner_background") return kKasnerBackground;
  if (name == "kasner_soliton") return kKasnerSoliton;
  if (name == "kasner_soliton_perturbed") return kKasnerSolitonPerturbed;
  if (name == "er_bessel") return kErBessel;
  return {};
}

std::vector<std::string> builtin_scenario_names() {
  return {"minkowski",         "traveling_wave",
          "smalldata_gaussian", "kasner_background",
          "kasner_soliton",     "kasner_soliton_perturbed",
          "er_bessel"};
}

}  // namespace bzwave
