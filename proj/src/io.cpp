#include "heatident/io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "heatident/units.hpp"
#include "heatident/version.hpp"

namespace heatident::io {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

double maybe_to_celsius(double kelvin, bool celsius) {
  return celsius ? kelvin_to_celsius(kelvin) : kelvin;
}

}  // namespace

void write_sensor_csv(const std::filesystem::path& path, const Eigen::VectorXd& times_s,
                      const Eigen::VectorXd& values_K, bool celsius) {
  if (times_s.size() != values_K.size()) {
    throw std::invalid_argument("times and values differ in length");
  }
  std::ofstream out = open_for_write(path);
  out << (celsius ? "t_s,T_C\n" : "t_s,T_K\n");
  for (Eigen::Index i = 0; i < times_s.size(); ++i) {
    out << format_double(times_s(i)) << ','
        << format_double(maybe_to_celsius(values_K(i), celsius)) << '\n';
  }
}

void write_field_csv(const std::filesystem::path& path, const FieldTrace& trace, bool celsius) {
  std::ofstream out = open_for_write(path);
  out << "t_s";
  for (int j = 0; j < trace.grid.node_count; ++j) out << ",node_" << j;
  out << '\n';
  for (int level = 0; level < trace.grid.level_count; ++level) {
    out << format_double(trace.times_star(level) * trace.scales.t_ref_s);
    for (int j = 0; j < trace.grid.node_count; ++j) {
      out << ','
          << format_double(
                 maybe_to_celsius(trace.values(j, level) * trace.scales.T_ref_K, celsius));
    }
    out << '\n';
  }
}

void write_sensitivity_csv(const std::filesystem::path& path, const SensitivityTrace& trace) {
  std::ofstream out = open_for_write(path);
  out << "t_s,dudp\n";
  for (Eigen::Index i = 0; i < trace.times_s.size(); ++i) {
    out << format_double(trace.times_s(i)) << ',' << format_double(trace.values(i)) << '\n';
  }
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> read_sensor_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open observation file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty observation file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  bool celsius = false;
  if (line == "t_s,T_C") {
    celsius = true;
  } else if (line != "t_s,T_K") {
    throw std::invalid_argument("observation file must start with 't_s,T_K' or 't_s,T_C'");
  }

  std::vector<double> times, values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("malformed observation row at line " + std::to_string(line_no));
    }
    try {
      std::size_t used = 0;
      const double t = std::stod(line.substr(0, comma), &used);
      const double v = std::stod(line.substr(comma + 1), &used);
      times.push_back(t);
      values.push_back(celsius ? celsius_to_kelvin(v) : v);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed observation row at line " + std::to_string(line_no));
    }
  }
  if (times.size() < 2) throw std::invalid_argument("observation file needs at least 2 rows");

  Eigen::VectorXd t(static_cast<Eigen::Index>(times.size()));
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < times.size(); ++i) {
    t(static_cast<Eigen::Index>(i)) = times[i];
    v(static_cast<Eigen::Index>(i)) = values[i];
  }
  return {std::move(t), std::move(v)};
}

namespace {

json forcing_to_json(const ForcingSignal& signal) {
  json doc;
  switch (signal.kind()) {
    case ForcingKind::Constant:
      doc["kind"] = "constant";
      doc["baseline_C"] = kelvin_to_celsius(signal.baseline_K());
      break;
    case ForcingKind::PresetLeft:
      doc["kind"] = "preset-left";
      break;
    case ForcingKind::PresetRight:
      doc["kind"] = "preset-right";
      break;
    case ForcingKind::SumOfTerms: {
      doc["kind"] = "sum-of-terms";
      doc["baseline_C"] = kelvin_to_celsius(signal.baseline_K());
      json terms = json::array();
      for (const ForcingTerm& term : signal.terms()) {
        json t;
        if (term.shape == ForcingTerm::Shape::Sine) {
          t["shape"] = "sin";
          t["period_s"] = term.timescale_s;
        } else {
          t["shape"] = "tanh";
          t["tau_s"] = term.timescale_s;
        }
        t["amplitude_K"] = term.amplitude_K;
        terms.push_back(std::move(t));
      }
      doc["terms"] = std::move(terms);
      break;
    }
  }
  return doc;
}

ForcingSignal forcing_from_json(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "preset-left") return ForcingSignal::preset_left();
  if (kind == "preset-right") return ForcingSignal::preset_right();
  if (kind == "constant") {
    return ForcingSignal::constant(celsius_to_kelvin(doc.at("baseline_C").get<double>()));
  }
  if (kind == "sum-of-terms") {
    std::vector<ForcingTerm> terms;
    for (const json& t : doc.at("terms")) {
      ForcingTerm term;
      const std::string shape = t.at("shape").get<std::string>();
      term.amplitude_K = t.at("amplitude_K").get<double>();
      if (shape == "sin") {
        term.shape = ForcingTerm::Shape::Sine;
        term.timescale_s = t.at("period_s").get<double>();
      } else if (shape == "tanh") {
        term.shape = ForcingTerm::Shape::Tanh;
        term.timescale_s = t.at("tau_s").get<double>();
      } else {
        throw std::invalid_argument("unknown forcing term shape '" + shape + "'");
      }
      terms.push_back(term);
    }
    return ForcingSignal::sum_of_terms(celsius_to_kelvin(doc.at("baseline_C").get<double>()),
                                       std::move(terms));
  }
  throw std::invalid_argument("unknown forcing kind '" + kind + "'");
}

}  // namespace

json problem_to_json(const WallProblem& problem, const ReferenceScales& scales) {
  json doc;
  doc["material"] = {{"id", problem.material.id},
                     {"c_MJ_per_m3K", problem.material.c / 1e6},
                     {"k_W_per_mK", problem.material.k},
                     {"name", problem.material.name}};
  doc["wall"] = {{"L_m", problem.L_m},
                 {"hL", problem.hL},
                 {"hR", problem.hR},
                 {"T0_C", kelvin_to_celsius(problem.T0_K)},
                 {"tf_s", problem.tf_s}};
  doc["forcing"] = {{"left", forcing_to_json(problem.forcing_L)},
                    {"right", forcing_to_json(problem.forcing_R)}};
  doc["scales"] = {{"t_ref_s", scales.t_ref_s},
                   {"T_ref_K", scales.T_ref_K},
                   {"k_ref_W_per_mK", scales.k_ref},
                   {"c_ref_MJ_per_m3K", scales.c_ref / 1e6},
                   {"h_ref_W_per_m2K", scales.h_ref}};
  return doc;
}

std::pair<WallProblem, ReferenceScales> problem_from_json(const json& doc) {
  WallProblem problem;
  const json& material = doc.at("material");
  problem.material.id = material.at("id").get<int>();
  problem.material.c = material.at("c_MJ_per_m3K").get<double>() * 1e6;
  problem.material.k = material.at("k_W_per_mK").get<double>();
  problem.material.name = material.value("name", std::string{});

  const json& wall = doc.at("wall");
  problem.L_m = wall.at("L_m").get<double>();
  problem.hL = wall.at("hL").get<double>();
  problem.hR = wall.at("hR").get<double>();
  problem.T0_K = celsius_to_kelvin(wall.at("T0_C").get<double>());
  problem.tf_s = wall.at("tf_s").get<double>();

  const json& forcing = doc.at("forcing");
  problem.forcing_L = forcing_from_json(forcing.at("left"));
  problem.forcing_R = forcing_from_json(forcing.at("right"));

  ReferenceScales scales;
  if (doc.contains("scales")) {
    const json& s = doc.at("scales");
    scales.t_ref_s = s.value("t_ref_s", scales.t_ref_s);
    scales.T_ref_K = s.value("T_ref_K", scales.T_ref_K);
    scales.k_ref = s.value("k_ref_W_per_mK", scales.k_ref);
    if (s.contains("c_ref_MJ_per_m3K")) scales.c_ref = s.at("c_ref_MJ_per_m3K").get<double>() * 1e6;
    scales.h_ref = s.value("h_ref_W_per_m2K", scales.h_ref);
  }
  problem.validate();
  scales.validate();
  return {std::move(problem), scales};
}

json estimation_result_to_json(const EstimationResult& result) {
  json doc;
  doc["p_est"] = result.p_est;
  doc["p_apr"] = result.p_apr;
  if (std::isnan(result.p_real)) {
    doc["p_real"] = nullptr;
    doc["ratio"] = nullptr;
  } else {
    doc["p_real"] = result.p_real;
    doc["ratio"] = result.p_est / result.p_real;
  }
  doc["N_m"] = result.iterations;
  doc["converged"] = result.converged;
  doc["wall_time_s"] = result.wall_time_s;
  json history = json::array();
  for (const IterationRecord& rec : result.history) {
    history.push_back({{"m", rec.m},
                       {"p", rec.p},
                       {"J", rec.J},
                       {"gamma1", rec.gamma1},
                       {"gamma2", rec.gamma2}});
  }
  doc["history"] = std::move(history);
  return doc;
}

void write_iteration_history_csv(const std::filesystem::path& path,
                                 const EstimationResult& result) {
  std::ofstream out = open_for_write(path);
  out << "m,p,J,gamma1,gamma2\n";
  for (const IterationRecord& rec : result.history) {
    out << rec.m << ',' << format_double(rec.p) << ',' << format_double(rec.J) << ','
        << format_double(rec.gamma1) << ',' << format_double(rec.gamma2) << '\n';
  }
}

namespace {

json summary_to_json(const SummaryStatistics& stats) {
  return {{"mean", stats.mean}, {"std", stats.std}};
}

}  // namespace

json report_to_json(const ReliabilityReport& report, bool include_samples) {
  json doc;
  doc["case"] = to_string(report.config.case_id);
  doc["base_seed"] = report.config.base_seed;
  doc["N_s"] = report.config.sample_count;
  doc["sigma_obs_K"] = report.config.sigma_obs_K;
  doc["guess_factor"] = report.config.guess_factor;

  const int n_models = static_cast<int>(report.models.size());
  json entries = json::array();
  for (std::size_t i = 0; i < report.stats.size(); ++i) {
    const ModelRowStats& stats = report.stats[i];
    json entry;
    entry["case"] = to_string(report.config.case_id);
    entry["model"] = to_string(stats.model);
    entry["config_row"] = stats.row_label;
    entry["p_real"] = stats.p_real;
    entry["N_s"] = stats.sample_count;
    entry["ratio"] = summary_to_json(stats.ratio);
    entry["iterations"] = summary_to_json(stats.iterations);
    entry["wall_time"] = summary_to_json(stats.wall_time);
    entry["failures"] = stats.failures;
    if (include_samples) {
      const int row_index = static_cast<int>(i) / n_models;
      const int model_index = static_cast<int>(i) % n_models;
      json samples = json::array();
      for (const SampleOutcome& outcome : report.samples) {
        if (outcome.row_index != row_index || to_string(outcome.model) !=
            to_string(report.models[static_cast<std::size_t>(model_index)])) {
          continue;
        }
        json sample;
        sample["sample"] = outcome.sample_index;
        sample["seed"] = outcome.seed;
        if (outcome.failed) {
          sample["failed"] = true;
          sample["error"] = outcome.error;
        } else {
          sample["result"] = estimation_result_to_json(outcome.result);
        }
        samples.push_back(std::move(sample));
      }
      entry["samples"] = std::move(samples);
    }
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

void write_report_table_csv(const std::filesystem::path& path, const ReliabilityReport& report) {
  std::ofstream out = open_for_write(path);
  out << "material_or_case,model,ratio_E,ratio_sigma,Nm_E,Nm_sigma,tcpu_E,tcpu_sigma\n";
  for (const ModelRowStats& stats : report.stats) {
    out << stats.row_label << ',' << to_string(stats.model) << ','
        << format_double(stats.ratio.mean) << ',' << format_double(stats.ratio.std) << ','
        << format_double(stats.iterations.mean) << ',' << format_double(stats.iterations.std)
        << ',' << format_double(stats.wall_time.mean) << ',' << format_double(stats.wall_time.std)
        << '\n';
  }
}

json make_manifest(const std::string& command, const std::string& config_path,
                   const json& resolved_config, std::uint64_t base_seed) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["config_path"] = config_path.empty() ? json(nullptr) : json(config_path);
  doc["config"] = resolved_config;
  doc["base_seed"] = base_seed;

  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
  doc["timestamp_utc"] = stamp;
  return doc;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out = open_for_write(path);
  out << doc.dump(2) << '\n';
}

}  // namespace heatident::io
