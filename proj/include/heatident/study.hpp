#pragma once

#include <string>
#include <vector>

#include "heatident/estimation.hpp"
#include "heatident/statistics.hpp"

namespace heatident {

enum class CaseId { A_capacity, B_conductivity, C_surface };

const char* to_string(CaseId id);
/// Accepts "A", "B", "C" or the long forms above (case-insensitive).
CaseId parse_case_id(const std::string& text);

/// One configuration row of a case study: a fully specified problem plus the
/// true value of the parameter under estimation.
struct CaseRow {
  std::string label;
  WallProblem problem;
  double p_real = 0.0;
};

struct CaseConfig {
  CaseId case_id = CaseId::A_capacity;
  ParameterKind param = ParameterKind::HeatCapacity;
  std::vector<CaseRow> rows;
  ObservationSchedule schedule;
  int sample_count = 100;  ///< N_s
  double sigma_obs_K = 0.2;
  double guess_factor = 0.1;  ///< p_apr = guess_factor * p_real
  std::uint64_t base_seed = 42;
  EstimationOptions solver{};  ///< model/param/p_apr are filled per run

  void validate() const;
};

/**
 * Built-in case studies over the material catalogue.
 *
 * A: unknown heat capacity, five materials. B: unknown conductivity, five
 * materials. C: unknown left surface coefficient over {0.5, 5, 10, 15} with
 * material 3. Common setup: L = 22 cm slab, T0 = 20 C, preset forcings,
 * hR = 5, sensor at mid-thickness, 201 instants every 360 s, sigma = 0.2 K.
 */
CaseConfig case_presets(CaseId id);

struct ModelRowStats {
  std::string row_label;
  ModelKind model = ModelKind::DuFortFrankel;
  double p_real = 0.0;
  SummaryStatistics ratio;       ///< p_est / p_real
  SummaryStatistics iterations;  ///< N_m
  SummaryStatistics wall_time;   ///< seconds per estimation
  int failures = 0;
  int sample_count = 0;
};

struct SampleOutcome {
  int row_index = 0;
  int sample_index = 0;
  ModelKind model = ModelKind::DuFortFrankel;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  EstimationResult result;
};

struct ReliabilityReport {
  CaseConfig config;
  std::vector<ModelKind> models;
  std::vector<ModelRowStats> stats;     ///< row-major, one entry per model
  std::vector<SampleOutcome> samples;   ///< ordered by (row, sample, model)
};

/**
 * Monte Carlo reliability study.
 *
 * For every configuration row the reference trace is solved once; each
 * sample then draws its noise from derive_seed(base_seed, sample_index) and
 * every requested model estimates on that same sample. Individual failures
 * are recorded, not fatal. Results are byte-deterministic for a fixed
 * config regardless of the worker count.
 */
ReliabilityReport run_case_study(const CaseConfig& config, const std::vector<ModelKind>& models,
                                 int jobs = 0);

}  // namespace heatident
