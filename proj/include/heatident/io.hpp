#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "heatident/estimation.hpp"
#include "heatident/study.hpp"

namespace heatident::io {

/// Shortest exact decimal form (17 significant digits), C locale.
std::string format_double(double value);

// --- trace CSV ---------------------------------------------------------

/// Header `t_s,T_K` (or `t_s,T_C`), one row per instant.
void write_sensor_csv(const std::filesystem::path& path, const Eigen::VectorXd& times_s,
                      const Eigen::VectorXd& values_K, bool celsius);

/// Header `t_s,node_0,...,node_N`, one row per stored level.
void write_field_csv(const std::filesystem::path& path, const FieldTrace& trace, bool celsius);

/// Header `t_s,dudp`.
void write_sensitivity_csv(const std::filesystem::path& path, const SensitivityTrace& trace);

/// Reads a sensor CSV; accepts the T_K or T_C header and returns Kelvin.
/// Throws std::invalid_argument on malformed content.
std::pair<Eigen::VectorXd, Eigen::VectorXd> read_sensor_csv(const std::filesystem::path& path);

// --- problem descriptor ------------------------------------------------

nlohmann::json problem_to_json(const WallProblem& problem, const ReferenceScales& scales);
/// Parses the descriptor; missing `scales` falls back to the defaults.
std::pair<WallProblem, ReferenceScales> problem_from_json(const nlohmann::json& doc);

// --- results -----------------------------------------------------------

nlohmann::json estimation_result_to_json(const EstimationResult& result);
/// Header `m,p,J,gamma1,gamma2`, one row per Gauss iteration.
void write_iteration_history_csv(const std::filesystem::path& path,
                                 const EstimationResult& result);

nlohmann::json report_to_json(const ReliabilityReport& report, bool include_samples = true);
/// Columns `material_or_case,model,ratio_E,ratio_sigma,Nm_E,Nm_sigma,tcpu_E,tcpu_sigma`.
void write_report_table_csv(const std::filesystem::path& path, const ReliabilityReport& report);

// --- run manifest ------------------------------------------------------

/// {command, config path, resolved config snapshot, base_seed, tool version,
/// timestamp}; written alongside every output so a run can be replayed.
nlohmann::json make_manifest(const std::string& command, const std::string& config_path,
                             const nlohmann::json& resolved_config, std::uint64_t base_seed);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace heatident::io
