#include "heatident/study.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "heatident/units.hpp"

namespace heatident {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::A_capacity: return "A_capacity";
    case CaseId::B_conductivity: return "B_conductivity";
    case CaseId::C_surface: return "C_surface";
  }
  return "?";
}

CaseId parse_case_id(const std::string& text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "a" || lower == "a_capacity") return CaseId::A_capacity;
  if (lower == "b" || lower == "b_conductivity") return CaseId::B_conductivity;
  if (lower == "c" || lower == "c_surface") return CaseId::C_surface;
  throw std::invalid_argument("unknown case id '" + text + "' (expected A, B or C)");
}

void CaseConfig::validate() const {
  if (sample_count < 1) throw std::invalid_argument("sample count must be at least 1");
  if (sigma_obs_K < 0.0) throw std::invalid_argument("noise level must be non-negative");
  if (!(guess_factor > 0.0)) throw std::invalid_argument("guess factor must be positive");
  if (rows.empty()) throw std::invalid_argument("case config has no rows");
  for (const CaseRow& row : rows) {
    row.problem.validate();
    if (!(row.p_real > 0.0)) throw std::invalid_argument("true parameter must be positive");
    schedule.validate(row.problem.tf_s);
  }
}

CaseConfig case_presets(CaseId id) {
  WallProblem base;
  base.L_m = 0.22;
  base.hL = 15.0;
  base.hR = 5.0;
  base.T0_K = celsius_to_kelvin(20.0);
  base.forcing_L = ForcingSignal::preset_left();
  base.forcing_R = ForcingSignal::preset_right();
  base.tf_s = 200 * 360.0;
  base.material = material_by_id(3);

  CaseConfig config;
  config.case_id = id;
  config.schedule = ObservationSchedule::uniform(base.L_m / 2.0, 360.0, 201);
  config.sample_count = 100;
  config.sigma_obs_K = 0.2;
  config.guess_factor = 0.1;
  config.base_seed = 42;

  switch (id) {
    case CaseId::A_capacity:
      config.param = ParameterKind::HeatCapacity;
      for (const Material& material : material_catalogue()) {
        WallProblem problem = base;
        problem.material = material;
        config.rows.push_back(
            {"material_" + std::to_string(material.id), problem, material.c});
      }
      break;
    case CaseId::B_conductivity:
      config.param = ParameterKind::Conductivity;
      for (const Material& material : material_catalogue()) {
        WallProblem problem = base;
        problem.material = material;
        config.rows.push_back(
            {"material_" + std::to_string(material.id), problem, material.k});
      }
      break;
    case CaseId::C_surface:
      config.param = ParameterKind::SurfaceCoefficientLeft;
      for (double h : {0.5, 5.0, 10.0, 15.0}) {
        WallProblem problem = base;
        problem.hL = h;
        std::string label = "hL_" + std::to_string(h);
        label.erase(label.find_last_not_of('0') + 1);
        if (label.back() == '.') label.pop_back();
        config.rows.push_back({label, problem, h});
      }
      break;
  }
  return config;
}

namespace {

void parallel_for(int task_count, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || task_count <= 1) {
    for (int i = 0; i < task_count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= task_count) return;
      try {
        body(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = std::min(jobs, task_count);
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ReliabilityReport run_case_study(const CaseConfig& config, const std::vector<ModelKind>& models,
                                 int jobs) {
  config.validate();
  if (models.empty()) throw std::invalid_argument("no direct models requested");
  if (jobs <= 0) {
    jobs = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  }

  ReliabilityReport report;
  report.config = config;
  report.models = models;

  const int n_models = static_cast<int>(models.size());
  for (std::size_t row_index = 0; row_index < config.rows.size(); ++row_index) {
    const CaseRow& row = config.rows[row_index];

    ReferenceOptions ref_options;
    ref_options.accuracy_target_K =
        config.sigma_obs_K > 0.0 ? config.sigma_obs_K / 10.0 : 1e-3;
    const ReferenceTrace reference =
        solve_reference(nondimensionalize(row.problem, config.solver.scales), config.schedule,
                        ref_options);

    std::vector<SampleOutcome> outcomes(
        static_cast<std::size_t>(config.sample_count) * static_cast<std::size_t>(n_models));

    parallel_for(config.sample_count, jobs, [&](int s) {
      const std::uint64_t seed = derive_seed(config.base_seed, static_cast<std::uint64_t>(s));
      const ObservationSample sample = sample_from_reference(
          reference, config.schedule, row.p_real, config.sigma_obs_K, seed);
      for (int mi = 0; mi < n_models; ++mi) {
        SampleOutcome& slot = outcomes[static_cast<std::size_t>(s) * n_models + mi];
        slot.row_index = static_cast<int>(row_index);
        slot.sample_index = s;
        slot.model = models[static_cast<std::size_t>(mi)];
        slot.seed = seed;
        EstimationOptions opt = config.solver;
        opt.model = slot.model;
        opt.param = config.param;
        opt.p_apr = config.guess_factor * row.p_real;
        try {
          slot.result = estimate(row.problem, sample, opt);
        } catch (const std::exception& e) {
          slot.failed = true;
          slot.error = e.what();
        }
      }
    });

    // aggregation in sample order keeps reports independent of the worker count
    for (int mi = 0; mi < n_models; ++mi) {
      std::vector<double> ratios, iterations, wall_times;
      int failures = 0;
      for (int s = 0; s < config.sample_count; ++s) {
        const SampleOutcome& outcome = outcomes[static_cast<std::size_t>(s) * n_models + mi];
        if (outcome.failed) {
          ++failures;
          continue;
        }
        ratios.push_back(outcome.result.p_est / row.p_real);
        iterations.push_back(static_cast<double>(outcome.result.iterations));
        wall_times.push_back(outcome.result.wall_time_s);
      }
      ModelRowStats stats;
      stats.row_label = row.label;
      stats.model = models[static_cast<std::size_t>(mi)];
      stats.p_real = row.p_real;
      stats.failures = failures;
      stats.sample_count = config.sample_count;
      if (!ratios.empty()) {
        stats.ratio = summarize(ratios);
        stats.iterations = summarize(iterations);
        stats.wall_time = summarize(wall_times);
      }
      report.stats.push_back(std::move(stats));
    }
    report.samples.insert(report.samples.end(), std::make_move_iterator(outcomes.begin()),
                          std::make_move_iterator(outcomes.end()));
  }
  return report;
}

}  // namespace heatident
