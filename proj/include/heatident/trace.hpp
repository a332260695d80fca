#pragma once

#include <Eigen/Dense>

#include "heatident/grid.hpp"

namespace heatident {

/**
 * Discrete dimensionless solution of the field model.
 *
 * Column n of `values` holds the nodal field u at time level n; the first
 * column equals u0 at every node. Geometry and scales are carried along so
 * sensor series can be mapped to seconds and Kelvin.
 */
struct FieldTrace {
  Eigen::VectorXd times_star;
  Eigen::MatrixXd values;  ///< node_count x level_count
  UniformGrid grid;
  double L_m = 0.0;
  ReferenceScales scales;
};

/// Discrete dimensional solution of the three-node lumped model. All series
/// share the same length and start at T0.
struct NodeTrace {
  Eigen::VectorXd times_s;
  Eigen::VectorXd T1_K;
  Eigen::VectorXd T2_K;  ///< interior node; the model's sensor series
  Eigen::VectorXd T3_K;
};

/// High-accuracy sensor series used to synthesize observations, together
/// with the refinement-based bound on its own error.
struct ReferenceTrace {
  Eigen::VectorXd times_s;
  Eigen::VectorXd values_K;
  double accuracy_estimate_K = 0.0;
};

/// Sensor location and acquisition instants (strictly increasing, >= 0).
struct ObservationSchedule {
  double x_obs_m = 0.0;
  Eigen::VectorXd instants_s;

  int count() const { return static_cast<int>(instants_s.size()); }
  /// Throws unless the instants are strictly increasing within [0, tf].
  void validate(double tf_s) const;
  /// t_k = k dt, k = 0..count-1.
  static ObservationSchedule uniform(double x_obs_m, double dt_s, int count);
};

// Strict samplers: the sensor must fall exactly on a grid node and every
// instant exactly on a stored time level. Off-node or off-level requests
// throw std::invalid_argument; there is no silent interpolation.

/// Node index of the sensor on the trace's grid.
int sensor_node_index(const FieldTrace& trace, double x_obs_m);

/// Sensor series in Kelvin at the scheduled instants.
Eigen::VectorXd sample_at_observation(const FieldTrace& trace, const ObservationSchedule& schedule);

/// T2 series at the scheduled instants (the lumped model's sensor).
Eigen::VectorXd sample_at_observation(const NodeTrace& trace, const ObservationSchedule& schedule);

/// Maps each instant to the index of an exactly matching entry of `times`.
Eigen::VectorXi matching_time_indices(const Eigen::VectorXd& times, const Eigen::VectorXd& instants);

}  // namespace heatident
