#pragma once

#include "heatident/dufort_frankel.hpp"
#include "heatident/rc_network.hpp"

namespace heatident {

enum class ParameterKind { HeatCapacity, Conductivity, SurfaceCoefficientLeft };
enum class ModelKind { DuFortFrankel, LumpedRc };

const char* to_string(ParameterKind param);
const char* to_string(ModelKind model);

/**
 * Sensor-level sensitivity series: the exact derivative of the discrete
 * model output with respect to one parameter, at every time level.
 *
 * Field-model values are d(u)/d(p*) with respect to the dimensionless
 * parameter; lumped-model values are d(T2)/d(p) in Kelvin per parameter
 * unit. The first entry is always zero.
 */
struct SensitivityTrace {
  ModelKind model = ModelKind::DuFortFrankel;
  ParameterKind param = ParameterKind::HeatCapacity;
  Eigen::VectorXd times_s;
  Eigen::VectorXd values;
};

/**
 * Differentiates the DF march itself: the update recurrence (including the
 * parameter dependence of lambda) and the discrete boundary closures, forced
 * by the stored forward solution. `forward` must come from solve_df on the
 * same problem and grid.
 */
SensitivityTrace solve_sensitivity_df(const DimensionlessProblem& dp, const UniformGrid& grid,
                                      ParameterKind param, const FieldTrace& forward,
                                      int sensor_node);

/// Differentiates the lumped one-step system A T^{n+1} = B T^n + Q term by
/// term: A X^{n+1} = B X^n + dB T^n + dQ - dA T^{n+1}, zero initial state.
SensitivityTrace solve_sensitivity_rc(const WallProblem& problem, const RcDiscretization& disc,
                                      ParameterKind param, const NodeTrace& forward);

/// Exact-level sampling, same strictness as the forward samplers.
Eigen::VectorXd sample_at_observation(const SensitivityTrace& trace,
                                      const ObservationSchedule& schedule);

}  // namespace heatident
