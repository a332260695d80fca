#include "heatident/trace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heatident {

namespace {

constexpr double kAlignTol = 1e-9;

// Index of `value` on the uniform ladder {origin + i*step}; throws unless the
// hit is exact to within kAlignTol (relative to the step).
int exact_ladder_index(double value, double origin, double step, int count,
                       const char* what) {
  const double offset = (value - origin) / step;
  const int index = static_cast<int>(std::llround(offset));
  if (index < 0 || index >= count || std::abs(offset - index) > kAlignTol * std::max(1.0, std::abs(offset))) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(value) +
                                " does not fall exactly on the solver grid");
  }
  return index;
}

}  // namespace

void ObservationSchedule::validate(double tf_s) const {
  if (count() < 2) throw std::invalid_argument("observation schedule needs at least 2 instants");
  if (instants_s(0) < 0.0) throw std::invalid_argument("observation instants must be >= 0");
  for (int k = 1; k < count(); ++k) {
    if (!(instants_s(k) > instants_s(k - 1))) {
      throw std::invalid_argument("observation instants must be strictly increasing");
    }
  }
  if (instants_s(count() - 1) > tf_s * (1.0 + kAlignTol)) {
    throw std::invalid_argument("observation schedule extends past the problem horizon");
  }
}

ObservationSchedule ObservationSchedule::uniform(double x_obs_m, double dt_s, int count) {
  if (count < 2 || !(dt_s > 0.0)) {
    throw std::invalid_argument("uniform schedule needs dt > 0 and count >= 2");
  }
  ObservationSchedule schedule;
  schedule.x_obs_m = x_obs_m;
  schedule.instants_s.resize(count);
  for (int k = 0; k < count; ++k) schedule.instants_s(k) = k * dt_s;
  return schedule;
}

int sensor_node_index(const FieldTrace& trace, double x_obs_m) {
  if (x_obs_m < 0.0 || x_obs_m > trace.L_m) {
    throw std::invalid_argument("sensor position outside [0, L]");
  }
  const double x_star = x_obs_m / trace.L_m;
  return exact_ladder_index(x_star, 0.0, trace.grid.dx_star, trace.grid.node_count,
                            "sensor position x* =");
}

Eigen::VectorXd sample_at_observation(const FieldTrace& trace, const ObservationSchedule& schedule) {
  const int node = sensor_node_index(trace, schedule.x_obs_m);
  const double dt_s = trace.grid.dt_star * trace.scales.t_ref_s;
  Eigen::VectorXd out(schedule.count());
  for (int k = 0; k < schedule.count(); ++k) {
    const int level = exact_ladder_index(schedule.instants_s(k), 0.0, dt_s,
                                         trace.grid.level_count, "observation instant");
    out(k) = trace.values(node, level) * trace.scales.T_ref_K;
  }
  return out;
}

Eigen::VectorXd sample_at_observation(const NodeTrace& trace, const ObservationSchedule& schedule) {
  const int levels = static_cast<int>(trace.times_s.size());
  if (levels < 2) throw std::invalid_argument("node trace too short to sample");
  const double dt_s = trace.times_s(1) - trace.times_s(0);
  Eigen::VectorXd out(schedule.count());
  for (int k = 0; k < schedule.count(); ++k) {
    const int level =
        exact_ladder_index(schedule.instants_s(k), trace.times_s(0), dt_s, levels,
                           "observation instant");
    out(k) = trace.T2_K(level);
  }
  return out;
}

Eigen::VectorXi matching_time_indices(const Eigen::VectorXd& times, const Eigen::VectorXd& instants) {
  const int n = static_cast<int>(times.size());
  if (n < 2) throw std::invalid_argument("time ladder too short");
  const double step = (times(n - 1) - times(0)) / (n - 1);
  Eigen::VectorXi out(instants.size());
  for (int k = 0; k < instants.size(); ++k) {
    out(k) = exact_ladder_index(instants(k), times(0), step, n, "instant");
  }
  return out;
}

}  // namespace heatident
