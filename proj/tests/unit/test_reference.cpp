#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include "heatident/errors.hpp"
#include "heatident/reference.hpp"
#include "heatident/units.hpp"
#include "support/oracles.hpp"

using namespace heatident;

TEST_CASE("solve_reference: equilibrium gives a constant trace with zero estimate") {
  WallProblem problem;
  problem.material = material_by_id(3);
  problem.forcing_L = ForcingSignal::constant(problem.T0_K);
  problem.forcing_R = ForcingSignal::constant(problem.T0_K);
  problem.tf_s = 7200.0;

  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 21);
  const ReferenceTrace trace = solve_reference(nondimensionalize(problem), schedule);
  CHECK(trace.accuracy_estimate_K == 0.0);
  CHECK((trace.values_K.array() - problem.T0_K).abs().maxCoeff() < 1e-10);
  CHECK(trace.times_s.size() == 21);
}

TEST_CASE("solve_reference: steady state matches the series-resistance oracle") {
  WallProblem problem;
  problem.material = {0, 7.5e4, 1.0, "fast-diffusion"};
  problem.forcing_L = ForcingSignal::constant(celsius_to_kelvin(20.0));
  problem.forcing_R = ForcingSignal::constant(celsius_to_kelvin(40.0));
  problem.tf_s = 183600.0;

  ObservationSchedule schedule;
  schedule.x_obs_m = 0.11;
  schedule.instants_s.resize(2);
  schedule.instants_s << 180000.0, 183600.0;

  ReferenceOptions options;
  options.accuracy_target_K = 1e-3;
  const ReferenceTrace trace = solve_reference(nondimensionalize(problem), schedule, options);
  const double expected_K = testing::steady_state_temperature(
      0.11, 0.22, 1.0, 15.0, 5.0, celsius_to_kelvin(20.0), celsius_to_kelvin(40.0));
  CHECK(std::abs(trace.values_K(1) - expected_K) < 1e-3);
  CHECK(trace.accuracy_estimate_K < 1e-3);
}

TEST_CASE("solve_reference: tightening the target moves values by less than the prior estimate") {
  WallProblem problem;
  problem.material = material_by_id(3);
  problem.tf_s = 7200.0;
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 21);

  ReferenceOptions loose;
  loose.accuracy_target_K = 0.02;
  const ReferenceTrace first = solve_reference(nondimensionalize(problem), schedule, loose);

  ReferenceOptions tight = loose;
  tight.accuracy_target_K = std::max(first.accuracy_estimate_K / 2.0, 1e-12);
  const ReferenceTrace second = solve_reference(nondimensionalize(problem), schedule, tight);

  const double shift = (second.values_K - first.values_K).cwiseAbs().maxCoeff();
  CHECK(shift <= first.accuracy_estimate_K + 1e-15);
}

TEST_CASE("solve_reference: misaligned requests are rejected") {
  WallProblem problem;
  problem.material = material_by_id(3);
  problem.tf_s = 7200.0;

  ObservationSchedule off_node = ObservationSchedule::uniform(0.1107, 360.0, 21);
  CHECK_THROWS_AS(solve_reference(nondimensionalize(problem), off_node), std::invalid_argument);

  ObservationSchedule incommensurate = ObservationSchedule::uniform(0.11, 360.0, 21);
  incommensurate.instants_s(7) += 0.013;
  CHECK_THROWS_AS(solve_reference(nondimensionalize(problem), incommensurate),
                  std::invalid_argument);

  ObservationSchedule past_horizon = ObservationSchedule::uniform(0.11, 3600.0, 21);
  CHECK_THROWS_AS(solve_reference(nondimensionalize(problem), past_horizon),
                  std::invalid_argument);
}

TEST_CASE("solve_reference: unreachable target errors out") {
  WallProblem problem;
  problem.material = material_by_id(3);
  problem.tf_s = 7200.0;
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 21);

  ReferenceOptions impossible;
  impossible.accuracy_target_K = 1e-15;
  impossible.max_doublings = 1;
  CHECK_THROWS_AS(solve_reference(nondimensionalize(problem), schedule, impossible), SolverError);
}
