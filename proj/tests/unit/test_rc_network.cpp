#include <stdexcept>
#include <algorithm>
#include <random>

#include <doctest.h>

#include "heatident/rc_network.hpp"
#include "heatident/units.hpp"
#include "support/oracles.hpp"

using namespace heatident;

namespace {

WallProblem preset_problem(int material_id) {
  WallProblem problem;
  problem.material = material_by_id(material_id);
  return problem;
}

}  // namespace

TEST_CASE("rc_stability_limit") {
  CHECK(rc_stability_limit(material_by_id(3), 0.11) == doctest::Approx(9075.0).epsilon(1e-12));
  CHECK(rc_stability_limit(material_by_id(1), 0.11) ==
        doctest::Approx(0.5 * 0.0121 * 5e4 / 0.05).epsilon(1e-12));
  CHECK(rc_stability_limit(material_by_id(1), 0.11) == doctest::Approx(6050.0).epsilon(1e-12));

  // monotone in 1/k
  Material stiff = material_by_id(3);
  stiff.k = 1e6;
  CHECK(rc_stability_limit(stiff, 0.11) < 1.0);
}

TEST_CASE("rc system matrices") {
  const WallProblem problem = preset_problem(3);
  const RcDiscretization disc = RcDiscretization::for_problem(problem, 3.6);
  CHECK(disc.ell_m == doctest::Approx(0.11).epsilon(1e-15));

  const RcSystemMatrices sys = rc_system_matrices(problem, disc);
  CHECK(sys.A(1, 0) == 0.0);
  CHECK(sys.A(1, 1) == 1.0);
  CHECK(sys.A(1, 2) == 0.0);
  CHECK(sys.A.determinant() != 0.0);

  // remains invertible in the adiabatic limit
  WallProblem adiabatic = problem;
  adiabatic.hL = 0.0;
  adiabatic.hR = 0.0;
  CHECK(rc_system_matrices(adiabatic, disc).A.determinant() != 0.0);

  const Eigen::Vector3d q = rc_forcing(problem, 0.0);
  CHECK(q(0) == doctest::Approx(problem.hL * problem.forcing_L(0.0)).epsilon(1e-15));
  CHECK(q(1) == 0.0);
  CHECK(q(2) == doctest::Approx(problem.hR * problem.forcing_R(0.0)).epsilon(1e-15));
}

TEST_CASE("solve_rc: equilibrium fixed point and step validation") {
  WallProblem problem = preset_problem(3);
  problem.forcing_L = ForcingSignal::constant(problem.T0_K);
  problem.forcing_R = ForcingSignal::constant(problem.T0_K);
  problem.tf_s = 36000.0;

  const NodeTrace trace = solve_rc(problem, RcDiscretization::for_problem(problem, 3.6));
  CHECK((trace.T1_K.array() - problem.T0_K).abs().maxCoeff() < 1e-12 * problem.T0_K);
  CHECK((trace.T2_K.array() - problem.T0_K).abs().maxCoeff() < 1e-12 * problem.T0_K);
  CHECK((trace.T3_K.array() - problem.T0_K).abs().maxCoeff() < 1e-12 * problem.T0_K);
  CHECK(trace.T2_K(0) == problem.T0_K);

  CHECK_THROWS_AS(solve_rc(problem, RcDiscretization::for_problem(problem, 9100.0)),
                  std::invalid_argument);
}

TEST_CASE("solve_rc: steady state equals the series-resistance value") {
  WallProblem problem;
  problem.material = {0, 7.5e4, 1.0, "fast-diffusion"};
  problem.forcing_L = ForcingSignal::constant(celsius_to_kelvin(20.0));
  problem.forcing_R = ForcingSignal::constant(celsius_to_kelvin(40.0));
  problem.tf_s = 183600.0;

  const NodeTrace trace = solve_rc(problem, RcDiscretization::for_problem(problem, 3.6));
  const double expected_K = testing::steady_state_temperature(
      0.11, 0.22, 1.0, 15.0, 5.0, celsius_to_kelvin(20.0), celsius_to_kelvin(40.0));
  CHECK(std::abs(trace.T2_K(trace.T2_K.size() - 1) - expected_K) < 1e-2);
  // the lumped resistances 1/hL + ell/k + ell/k + 1/hR add up to the same
  // total, so the agreement is much tighter than the stated bound
  CHECK(std::abs(trace.T2_K(trace.T2_K.size() - 1) - expected_K) < 1e-6);
}

TEST_CASE("solve_rc: discrete maximum principle under constant forcing") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> temp_dist(280.0, 320.0);
  for (int trial = 0; trial < 8; ++trial) {
    WallProblem problem = preset_problem(1 + trial % 5);
    const double t_left = temp_dist(rng);
    const double t_right = temp_dist(rng);
    problem.T0_K = temp_dist(rng);
    problem.forcing_L = ForcingSignal::constant(t_left);
    problem.forcing_R = ForcingSignal::constant(t_right);
    problem.tf_s = 36000.0;

    const double limit = rc_stability_limit(problem.material, problem.L_m / 2.0);
    std::uniform_real_distribution<double> dt_dist(limit / 1000.0, limit);
    const NodeTrace trace =
        solve_rc(problem, RcDiscretization::for_problem(problem, dt_dist(rng)));

    const double lo = std::min({problem.T0_K, t_left, t_right}) - 1e-9;
    const double hi = std::max({problem.T0_K, t_left, t_right}) + 1e-9;
    for (const Eigen::VectorXd* series : {&trace.T1_K, &trace.T2_K, &trace.T3_K}) {
      CHECK(series->minCoeff() >= lo);
      CHECK(series->maxCoeff() <= hi);
    }
  }
}

TEST_CASE("node sampling is strict") {
  WallProblem problem = preset_problem(3);
  const NodeTrace trace = solve_rc(problem, RcDiscretization::for_problem(problem, 3.6));
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 201);
  const Eigen::VectorXd series = sample_at_observation(trace, schedule);
  CHECK(series.size() == 201);
  CHECK(series(0) == doctest::Approx(problem.T0_K).epsilon(1e-15));
  CHECK(series(100) == doctest::Approx(trace.T2_K(10000)).epsilon(1e-15));

  ObservationSchedule off = schedule;
  off.instants_s(5) = 360.0 * 5 + 0.5;
  CHECK_THROWS_AS(sample_at_observation(trace, off), std::invalid_argument);
}
