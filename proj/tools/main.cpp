// heatident: transient wall-conduction models, parameter estimation and
// Monte Carlo reliability studies from one command-line entry point.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "heatident/io.hpp"
#include "heatident/units.hpp"
#include "heatident/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace heatident;

namespace {

struct CommonArgs {
  std::string case_id = "A";
  int material = 3;
  std::optional<double> hL;
  std::string config_path;
  std::string out_dir = "heatident_out";
  bool kelvin = false;
  std::optional<double> x_obs;
  std::optional<double> obs_dt;
  std::optional<int> obs_count;
};

struct ResolvedSetup {
  WallProblem problem;
  ReferenceScales scales;
  ObservationSchedule schedule;
  CaseConfig preset;  // solver settings and defaults for the chosen case
  json config_snapshot;
};

// Problem resolution: case preset, then optional JSON descriptor, then flags.
ResolvedSetup resolve_setup(const CommonArgs& args) {
  ResolvedSetup setup;
  setup.preset = case_presets(parse_case_id(args.case_id));
  setup.scales = setup.preset.solver.scales;

  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + args.config_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw std::invalid_argument("malformed config JSON: " + std::string(e.what()));
    }
    try {
      auto [problem, scales] = io::problem_from_json(doc);
      setup.problem = std::move(problem);
      setup.scales = scales;
    } catch (const json::exception& e) {
      throw std::invalid_argument("invalid problem descriptor: " + std::string(e.what()));
    }
    setup.preset.solver.scales = setup.scales;
  } else {
    setup.problem = setup.preset.rows.front().problem;
    setup.problem.material = material_by_id(args.material);
    if (setup.preset.case_id == CaseId::C_surface) setup.problem.material = material_by_id(3);
  }
  if (args.hL) setup.problem.hL = *args.hL;
  setup.problem.validate();

  const double x_obs = args.x_obs.value_or(setup.problem.L_m / 2.0);
  const double obs_dt = args.obs_dt.value_or(360.0);
  const int obs_count =
      args.obs_count.value_or(static_cast<int>(setup.problem.tf_s / obs_dt) + 1);
  setup.schedule = ObservationSchedule::uniform(x_obs, obs_dt, obs_count);
  setup.schedule.validate(setup.problem.tf_s);

  setup.config_snapshot = io::problem_to_json(setup.problem, setup.scales);
  setup.config_snapshot["observation"] = {
      {"x_obs_m", x_obs}, {"dt_s", obs_dt}, {"count", obs_count}};
  return setup;
}

ParameterKind parse_param(const std::string& text) {
  if (text == "c") return ParameterKind::HeatCapacity;
  if (text == "k") return ParameterKind::Conductivity;
  if (text == "hL" || text == "hl") return ParameterKind::SurfaceCoefficientLeft;
  throw std::invalid_argument("unknown parameter '" + text + "' (expected c, k or hL)");
}

std::vector<ModelKind> parse_models(const std::string& text) {
  if (text == "both" || text == "df,rc") return {ModelKind::DuFortFrankel, ModelKind::LumpedRc};
  if (text == "rc,df") return {ModelKind::LumpedRc, ModelKind::DuFortFrankel};
  if (text == "df") return {ModelKind::DuFortFrankel};
  if (text == "rc") return {ModelKind::LumpedRc};
  throw std::invalid_argument("unknown model list '" + text + "' (expected df, rc or both)");
}

int run_simulate(const CommonArgs& args, const std::string& model, double sigma_check,
                 bool full_field) {
  const ResolvedSetup setup = resolve_setup(args);
  const fs::path out(args.out_dir);
  fs::create_directories(out);

  json manifest_extra;
  Eigen::VectorXd times = setup.schedule.instants_s;
  Eigen::VectorXd values;

  if (model == "df") {
    const DimensionlessProblem dp = nondimensionalize(setup.problem, setup.scales);
    const UniformGrid grid = UniformGrid::for_horizon(setup.preset.solver.df_node_count,
                                                      setup.preset.solver.df_dt_star, dp.tf_star);
    const FieldTrace trace = solve_df(dp, grid);
    values = sample_at_observation(trace, setup.schedule);
    if (full_field) io::write_field_csv(out / "field.csv", trace, !args.kelvin);
  } else if (model == "rc") {
    const NodeTrace trace = solve_rc(
        setup.problem, RcDiscretization::for_problem(setup.problem, setup.preset.solver.rc_dt_s));
    values = sample_at_observation(trace, setup.schedule);
    if (full_field) {
      std::ofstream node_csv(out / "field.csv");
      node_csv << "t_s,T1,T2,T3\n";
      for (Eigen::Index i = 0; i < trace.times_s.size(); ++i) {
        auto emit = [&](double kelvin) {
          return io::format_double(args.kelvin ? kelvin : kelvin_to_celsius(kelvin));
        };
        node_csv << io::format_double(trace.times_s(i)) << ',' << emit(trace.T1_K(i)) << ','
                 << emit(trace.T2_K(i)) << ',' << emit(trace.T3_K(i)) << '\n';
      }
    }
  } else if (model == "reference") {
    ReferenceOptions options;
    if (sigma_check > 0.0) options.accuracy_target_K = sigma_check;
    const ReferenceTrace trace =
        solve_reference(nondimensionalize(setup.problem, setup.scales), setup.schedule, options);
    values = trace.values_K;
    manifest_extra["accuracy_estimate_K"] = trace.accuracy_estimate_K;
    manifest_extra["accuracy_target_K"] = options.accuracy_target_K;
  } else {
    throw std::invalid_argument("unknown model '" + model + "' (expected df, rc or reference)");
  }

  io::write_sensor_csv(out / "sensor.csv", times, values, !args.kelvin);

  json manifest = io::make_manifest("simulate", args.config_path, setup.config_snapshot,
                                    setup.preset.base_seed);
  manifest["model"] = model;
  manifest["outputs"] = json::array({"sensor.csv"});
  if (full_field) manifest["outputs"].push_back("field.csv");
  for (auto& [key, value] : manifest_extra.items()) manifest[key] = value;
  io::write_json(out / "manifest.json", manifest);

  std::printf("wrote %s (%d samples)\n", (out / "sensor.csv").c_str(),
              static_cast<int>(values.size()));
  return 0;
}

int run_estimate(const CommonArgs& args, const std::string& model_text, std::string param_text,
                 bool synthetic, const std::string& obs_path, double sigma, std::uint64_t seed,
                 double guess_factor, std::optional<double> guess) {
  const ResolvedSetup setup = resolve_setup(args);
  const ModelKind model = parse_models(model_text).front();
  if (param_text.empty()) {
    switch (setup.preset.case_id) {
      case CaseId::A_capacity: param_text = "c"; break;
      case CaseId::B_conductivity: param_text = "k"; break;
      case CaseId::C_surface: param_text = "hL"; break;
    }
  }
  const ParameterKind param = parse_param(param_text);

  double p_real = std::numeric_limits<double>::quiet_NaN();
  switch (param) {
    case ParameterKind::HeatCapacity: p_real = setup.problem.material.c; break;
    case ParameterKind::Conductivity: p_real = setup.problem.material.k; break;
    case ParameterKind::SurfaceCoefficientLeft: p_real = setup.problem.hL; break;
  }

  ObservationSample sample;
  if (synthetic) {
    sample = generate_observation_sample(setup.problem, p_real, setup.schedule, sigma, seed,
                                         setup.scales);
  } else {
    if (obs_path.empty()) {
      throw std::invalid_argument("estimate needs either --synthetic or --obs FILE");
    }
    auto [times, values] = io::read_sensor_csv(obs_path);
    sample.schedule.x_obs_m = setup.schedule.x_obs_m;
    sample.schedule.instants_s = std::move(times);
    sample.schedule.validate(setup.problem.tf_s);
    sample.values_K = std::move(values);
    sample.sigma_obs_K = sigma;
    sample.seed = 0;
    sample.p_real = std::numeric_limits<double>::quiet_NaN();
    sample.noise_K = Eigen::VectorXd::Zero(sample.values_K.size());
  }

  EstimationOptions options = setup.preset.solver;
  options.model = model;
  options.param = param;
  options.p_apr = guess.value_or(guess_factor * p_real);
  const EstimationResult result = estimate(setup.problem, sample, options);

  const fs::path out(args.out_dir);
  fs::create_directories(out);
  io::write_json(out / "result.json", io::estimation_result_to_json(result));
  io::write_iteration_history_csv(out / "history.csv", result);

  json manifest = io::make_manifest("estimate", args.config_path, setup.config_snapshot, seed);
  manifest["model"] = to_string(model);
  manifest["param"] = to_string(param);
  manifest["synthetic"] = synthetic;
  if (!synthetic) manifest["observations"] = obs_path;
  manifest["sigma_obs_K"] = sigma;
  manifest["p_apr"] = options.p_apr;
  manifest["outputs"] = json::array({"result.json", "history.csv"});
  io::write_json(out / "manifest.json", manifest);

  std::printf("p_est = %.8g (N_m = %d, converged = %s)\n", result.p_est, result.iterations,
              result.converged ? "true" : "false");
  return 0;
}

void write_plot_data(const fs::path& dir, const ReliabilityReport& report, bool kelvin) {
  fs::create_directories(dir);

  {
    std::ofstream out(dir / "ratio_vs_config.csv");
    out << "material_or_case,model,ratio_E,ratio_sigma\n";
    for (const ModelRowStats& stats : report.stats) {
      out << stats.row_label << ',' << to_string(stats.model) << ','
          << io::format_double(stats.ratio.mean) << ',' << io::format_double(stats.ratio.std)
          << '\n';
    }
  }
  {
    std::ofstream out(dir / "iterations_vs_config.csv");
    out << "material_or_case,model,Nm_E,Nm_sigma\n";
    for (const ModelRowStats& stats : report.stats) {
      out << stats.row_label << ',' << to_string(stats.model) << ','
          << io::format_double(stats.iterations.mean) << ','
          << io::format_double(stats.iterations.std) << '\n';
    }
  }
  {
    // mean stopping-criteria trajectories per configuration row and model
    std::ofstream out(dir / "gamma_vs_iteration.csv");
    out << "material_or_case,model,m,gamma1_mean,gamma2_mean,samples_at_m\n";
    const int n_models = static_cast<int>(report.models.size());
    for (std::size_t entry = 0; entry < report.stats.size(); ++entry) {
      const int row_index = static_cast<int>(entry) / n_models;
      const ModelKind model = report.stats[entry].model;
      int longest = 0;
      for (const SampleOutcome& outcome : report.samples) {
        if (outcome.row_index != row_index || outcome.model != model || outcome.failed) continue;
        longest = std::max(longest, static_cast<int>(outcome.result.history.size()));
      }
      for (int m = 1; m <= longest; ++m) {
        double g1 = 0.0, g2 = 0.0;
        int count = 0;
        for (const SampleOutcome& outcome : report.samples) {
          if (outcome.row_index != row_index || outcome.model != model || outcome.failed) continue;
          if (static_cast<int>(outcome.result.history.size()) < m) continue;
          g1 += outcome.result.history[static_cast<std::size_t>(m - 1)].gamma1;
          g2 += outcome.result.history[static_cast<std::size_t>(m - 1)].gamma2;
          ++count;
        }
        out << report.stats[entry].row_label << ',' << to_string(model) << ',' << m << ','
            << io::format_double(g1 / count) << ',' << io::format_double(g2 / count) << ','
            << count << '\n';
      }
    }
  }

  // sensor overlays: first sample's observations against each model's
  // prediction at the estimated-parameter mean
  for (std::size_t row_index = 0; row_index < report.config.rows.size(); ++row_index) {
    const CaseRow& row = report.config.rows[row_index];
    const ObservationSample sample = [&] {
      ReferenceOptions options;
      options.accuracy_target_K =
          report.config.sigma_obs_K > 0.0 ? report.config.sigma_obs_K / 10.0 : 1e-3;
      const ReferenceTrace reference = solve_reference(
          nondimensionalize(row.problem, report.config.solver.scales), report.config.schedule,
          options);
      return sample_from_reference(reference, report.config.schedule, row.p_real,
                                   report.config.sigma_obs_K,
                                   derive_seed(report.config.base_seed, 0));
    }();

    std::ofstream out(dir / ("overlay_" + row.label + ".csv"));
    out << "t_s,T_obs";
    std::vector<Eigen::VectorXd> predictions;
    for (std::size_t mi = 0; mi < report.models.size(); ++mi) {
      const ModelKind model = report.models[mi];
      const double p_mean =
          report.stats[row_index * report.models.size() + mi].ratio.mean * row.p_real;
      WallProblem fitted = row.problem;
      switch (report.config.param) {
        case ParameterKind::HeatCapacity: fitted.material.c = p_mean; break;
        case ParameterKind::Conductivity: fitted.material.k = p_mean; break;
        case ParameterKind::SurfaceCoefficientLeft: fitted.hL = p_mean; break;
      }
      if (model == ModelKind::DuFortFrankel) {
        const DimensionlessProblem dp = nondimensionalize(fitted, report.config.solver.scales);
        const UniformGrid grid =
            UniformGrid::for_horizon(report.config.solver.df_node_count,
                                     report.config.solver.df_dt_star, dp.tf_star);
        predictions.push_back(sample_at_observation(solve_df(dp, grid), report.config.schedule));
      } else {
        predictions.push_back(sample_at_observation(
            solve_rc(fitted, RcDiscretization::for_problem(fitted, report.config.solver.rc_dt_s)),
            report.config.schedule));
      }
      out << ",T_" << to_string(model);
    }
    out << '\n';
    for (int k = 0; k < report.config.schedule.count(); ++k) {
      auto emit = [&](double value_K) {
        return io::format_double(kelvin ? value_K : kelvin_to_celsius(value_K));
      };
      out << io::format_double(report.config.schedule.instants_s(k)) << ','
          << emit(sample.values_K(k));
      for (const Eigen::VectorXd& series : predictions) out << ',' << emit(series(k));
      out << '\n';
    }
  }
}

int run_study(const std::string& case_text, int samples, const std::string& models_text,
              std::uint64_t seed, double sigma, int jobs, const std::string& out_dir,
              bool kelvin) {
  CaseConfig config = case_presets(parse_case_id(case_text));
  if (samples < 1) throw std::invalid_argument("--samples must be at least 1");
  config.sample_count = samples;
  config.base_seed = seed;
  if (sigma >= 0.0) config.sigma_obs_K = sigma;
  const std::vector<ModelKind> models = parse_models(models_text);

  const ReliabilityReport report = run_case_study(config, models, jobs);

  const fs::path out(out_dir);
  fs::create_directories(out);
  io::write_report_table_csv(out / "table.csv", report);
  io::write_json(out / "report.json", io::report_to_json(report));
  write_plot_data(out / "plotdata", report, kelvin);

  json snapshot;
  snapshot["case"] = to_string(config.case_id);
  snapshot["N_s"] = config.sample_count;
  snapshot["sigma_obs_K"] = config.sigma_obs_K;
  snapshot["guess_factor"] = config.guess_factor;
  snapshot["models"] = models_text;
  snapshot["rows"] = json::array();
  for (const CaseRow& row : config.rows) {
    snapshot["rows"].push_back(
        {{"label", row.label},
         {"p_real", row.p_real},
         {"problem", io::problem_to_json(row.problem, config.solver.scales)}});
  }
  json manifest = io::make_manifest("study", "", snapshot, config.base_seed);
  manifest["jobs"] = jobs;
  manifest["outputs"] = json::array({"report.json", "table.csv", "plotdata/"});
  io::write_json(out / "manifest.json", manifest);

  for (const ModelRowStats& stats : report.stats) {
    std::printf("%-14s %-3s E[ratio]=%8.4f sigma=%7.4f  E[N_m]=%6.2f  failures=%d\n",
                stats.row_label.c_str(), to_string(stats.model), stats.ratio.mean,
                stats.ratio.std, stats.iterations.mean, stats.failures);
  }
  std::printf("wrote %s\n", (out / "table.csv").c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transient wall-conduction models, parameter estimation and reliability studies"};
  app.require_subcommand(1);

  CommonArgs common;
  std::function<int()> action;

  auto add_common = [&common](CLI::App* cmd, bool with_schedule) {
    cmd->add_option("--case", common.case_id,
                    "case preset: A (capacity), B (conductivity), C (surface)");
    cmd->add_option("--material", common.material, "catalogue material id (1-5)");
    cmd->add_option("--hL", common.hL, "override the left surface coefficient, W/(m^2 K)");
    cmd->add_option("--config", common.config_path, "problem descriptor JSON");
    cmd->add_option("--out", common.out_dir, "output directory");
    cmd->add_flag("--kelvin", common.kelvin, "write temperatures in K instead of C");
    if (with_schedule) {
      cmd->add_option("--x-obs", common.x_obs, "sensor position, m (default mid-thickness)");
      cmd->add_option("--obs-dt", common.obs_dt, "observation spacing, s (default 360)");
      cmd->add_option("--obs-count", common.obs_count, "number of observation instants");
    }
  };

  std::string sim_model = "df";
  double sim_sigma_check = 0.0;
  bool sim_full_field = false;
  {
    CLI::App* cmd =
        app.add_subcommand("simulate", "run one direct model and export the sensor series");
    add_common(cmd, true);
    cmd->add_option("--model", sim_model, "df | rc | reference");
    cmd->add_option("--sigma-check", sim_sigma_check, "reference accuracy target, K");
    cmd->add_flag("--full-field", sim_full_field, "also export every node at every level");
    cmd->callback([&] {
      action = [&] { return run_simulate(common, sim_model, sim_sigma_check, sim_full_field); };
    });
  }

  std::string est_model = "df";
  std::string est_param;
  bool est_synthetic = false;
  std::string est_obs_path;
  double est_sigma = 0.2;
  std::uint64_t est_seed = 42;
  double est_guess_factor = 0.1;
  std::optional<double> est_guess;
  {
    CLI::App* cmd = app.add_subcommand("estimate", "identify one parameter from observations");
    add_common(cmd, true);
    cmd->add_option("--model", est_model, "df | rc");
    cmd->add_option("--param", est_param, "c | k | hL (default follows the case)");
    cmd->add_flag("--synthetic", est_synthetic, "generate observations from the reference solver");
    cmd->add_option("--obs", est_obs_path, "observation CSV (t_s,T_K or t_s,T_C)");
    cmd->add_option("--sigma", est_sigma, "observation noise, K");
    cmd->add_option("--seed", est_seed, "noise seed")->envname("HEATIDENT_SEED");
    cmd->add_option("--guess-factor", est_guess_factor, "p_apr as a fraction of the true value");
    cmd->add_option("--guess", est_guess, "explicit initial guess (overrides --guess-factor)");
    cmd->callback([&] {
      action = [&] {
        return run_estimate(common, est_model, est_param, est_synthetic, est_obs_path, est_sigma,
                            est_seed, est_guess_factor, est_guess);
      };
    });
  }

  std::string study_case = "A";
  int study_samples = 100;
  std::string study_models = "both";
  std::uint64_t study_seed = 42;
  double study_sigma = -1.0;
  int study_jobs = 0;
  std::string study_out = "heatident_out";
  bool study_kelvin = false;
  {
    CLI::App* cmd =
        app.add_subcommand("study", "Monte Carlo reliability study over a case preset");
    cmd->add_option("case", study_case, "A | B | C");
    cmd->add_option("--samples", study_samples, "samples per configuration row (N_s)");
    cmd->add_option("--models", study_models, "df | rc | both");
    cmd->add_option("--seed", study_seed, "base seed")->envname("HEATIDENT_SEED");
    cmd->add_option("--sigma", study_sigma, "observation noise, K (default 0.2)");
    cmd->add_option("--jobs", study_jobs,
                    "worker threads (0 = auto); output is identical for any value");
    cmd->add_option("--out", study_out, "output directory");
    cmd->add_flag("--kelvin", study_kelvin, "plot data in K instead of C");
    cmd->callback([&] {
      action = [&] {
        return run_study(study_case, study_samples, study_models, study_seed, study_sigma,
                         study_jobs, study_out, study_kelvin);
      };
    });
  }

  {
    CLI::App* cmd = app.add_subcommand("version", "print the tool version");
    cmd->callback([&] {
      action = [] {
        std::printf("%s %s\n", kToolName, kToolVersion);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
