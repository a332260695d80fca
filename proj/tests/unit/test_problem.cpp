#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include "heatident/problem.hpp"
#include "heatident/units.hpp"

using namespace heatident;

namespace {

WallProblem preset_problem(int material_id) {
  WallProblem problem;
  problem.material = material_by_id(material_id);
  return problem;
}

}  // namespace

TEST_CASE("unit helpers") {
  CHECK(celsius_to_kelvin(20.0) == doctest::Approx(293.15));
  CHECK(celsius_to_kelvin(0.0) == doctest::Approx(273.15));
  for (double c : {-40.0, 0.0, 19.5, 100.0}) {
    CHECK(kelvin_to_celsius(celsius_to_kelvin(c)) == doctest::Approx(c).epsilon(1e-15));
  }
}

TEST_CASE("material catalogue") {
  CHECK(material_catalogue().size() == 5);
  const Material brick = material_by_id(3);
  CHECK(brick.c == doctest::Approx(1.5e6));
  CHECK(brick.k == doctest::Approx(1.0));
  CHECK(brick.name == "brick");
  CHECK_THROWS_AS(material_by_id(9), std::invalid_argument);
  Material bad = brick;
  bad.c = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("nondimensionalize: brick on the default scales") {
  const DimensionlessProblem dp = nondimensionalize(preset_problem(3));
  CHECK(dp.k_star == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dp.c_star == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dp.hL_star == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(dp.hR_star == doctest::Approx(1.0).epsilon(1e-14));

  // second arithmetic path for the dimensionless groups
  const double fo_direct = 3600.0 / (1.5e6 * 0.0484);
  const double fo_regrouped = (3600.0 / 1.5e6) / (0.22 * 0.22);
  CHECK(fo_direct == doctest::Approx(fo_regrouped).epsilon(1e-14));
  CHECK(dp.Fo == doctest::Approx(fo_direct).epsilon(1e-14));
  CHECK(dp.Fo == doctest::Approx(0.049587).epsilon(2e-5));
  CHECK(dp.Bi == doctest::Approx(5.0 * 0.22 / 1.0).epsilon(1e-14));
  CHECK(dp.Bi == doctest::Approx(1.1).epsilon(1e-14));

  CHECK(dp.u0 == doctest::Approx(293.15 / 273.15).epsilon(1e-15));
  CHECK(dp.tf_star == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("nondimensionalize: identity scaling and insulation ratios") {
  WallProblem problem = preset_problem(3);
  problem.material.c = 1.5e6;
  problem.material.k = 1.0;
  problem.hL = 5.0;
  problem.hR = 5.0;
  const DimensionlessProblem identity = nondimensionalize(problem);
  CHECK(identity.k_star == doctest::Approx(1.0));
  CHECK(identity.c_star == doctest::Approx(1.0));
  CHECK(identity.hL_star == doctest::Approx(1.0));
  CHECK(identity.hR_star == doctest::Approx(1.0));

  const DimensionlessProblem insulation = nondimensionalize(preset_problem(1));
  CHECK(insulation.k_star == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(insulation.c_star == doctest::Approx(1.0 / 30.0).epsilon(1e-14));
}

TEST_CASE("nondimensionalize rejects bad inputs") {
  WallProblem problem = preset_problem(3);
  problem.L_m = 0.0;
  CHECK_THROWS_AS(nondimensionalize(problem), std::invalid_argument);

  ReferenceScales scales;
  scales.T_ref_K = -1.0;
  CHECK_THROWS_AS(nondimensionalize(preset_problem(3), scales), std::invalid_argument);
}

TEST_CASE("forcing presets match their closed forms") {
  const ForcingSignal left = ForcingSignal::preset_left();
  const ForcingSignal right = ForcingSignal::preset_right();
  const double T0 = celsius_to_kelvin(20.0);

  CHECK(left(0.0) == doctest::Approx(T0).epsilon(1e-15));
  CHECK(right(0.0) == doctest::Approx(T0).epsilon(1e-15));

  // one period of the slow sine later the fast sine has also closed
  CHECK(left(20.0 * 3600.0) == doctest::Approx(T0).epsilon(1e-9));
  CHECK(right(4.0 * 3600.0) == doctest::Approx(T0 + 20.0 * std::tanh(1.0)).epsilon(1e-12));

  for (double t : {0.0, 900.0, 3600.0, 50000.0}) {
    const double expected_left = T0 + 10.0 * std::sin(2.0 * M_PI * t / (20.0 * 3600.0)) +
                                 10.0 * std::sin(2.0 * M_PI * t / (2.0 * 3600.0));
    const double expected_right = T0 + 20.0 * std::tanh(t / (4.0 * 3600.0)) -
                                  10.0 * std::sin(2.0 * M_PI * t / (4.0 * 3600.0));
    CHECK(left(t) == doctest::Approx(expected_left).epsilon(1e-13));
    CHECK(right(t) == doctest::Approx(expected_right).epsilon(1e-13));
  }
}

TEST_CASE("forcing signals are continuous on a sampled grid") {
  const ForcingSignal signals[] = {ForcingSignal::preset_left(), ForcingSignal::preset_right()};
  for (const ForcingSignal& signal : signals) {
    double worst_coarse = 0.0;
    double worst_fine = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double t = i * 180.0;
      worst_coarse = std::max(worst_coarse, std::abs(signal(t + 10.0) - signal(t)));
      worst_fine = std::max(worst_fine, std::abs(signal(t + 0.01) - signal(t)));
    }
    CHECK(worst_fine < 1e-2 * worst_coarse);
    CHECK(worst_fine < 1e-3);
  }
}

TEST_CASE("dimensionless forcing commutes with the scaling") {
  const WallProblem problem = preset_problem(2);
  const ReferenceScales scales;
  const DimensionlessProblem dp = nondimensionalize(problem, scales);
  for (double t_star : {0.0, 0.25, 1.0, 7.5, 19.990}) {
    CHECK(dp.u_inf_L(t_star) ==
          doctest::Approx(problem.forcing_L(t_star * scales.t_ref_s) / scales.T_ref_K)
              .epsilon(1e-15));
    CHECK(dp.u_inf_R(t_star) ==
          doctest::Approx(problem.forcing_R(t_star * scales.t_ref_s) / scales.T_ref_K)
              .epsilon(1e-15));
  }
}

TEST_CASE("redimensionalization is the identity") {
  const ReferenceScales scales;
  for (double T : {250.0, 273.15, 293.15, 310.2, 340.0}) {
    const double u = T / scales.T_ref_K;
    CHECK(u * scales.T_ref_K == doctest::Approx(T).epsilon(1e-15));
  }
}
