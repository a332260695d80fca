#include "heatident/problem.hpp"

#include <stdexcept>

namespace heatident {

void ReferenceScales::validate() const {
  if (!(t_ref_s > 0.0 && T_ref_K > 0.0 && k_ref > 0.0 && c_ref > 0.0 && h_ref > 0.0)) {
    throw std::invalid_argument("reference scales must all be strictly positive");
  }
}

void WallProblem::validate() const {
  if (!(L_m > 0.0)) throw std::invalid_argument("wall thickness must be positive");
  if (hL < 0.0 || hR < 0.0) {
    throw std::invalid_argument("surface heat transfer coefficients must be non-negative");
  }
  if (!(T0_K > 0.0)) throw std::invalid_argument("initial temperature must be positive (Kelvin)");
  if (!(tf_s > 0.0)) throw std::invalid_argument("time horizon must be positive");
  material.validate();
}

DimensionlessProblem nondimensionalize(const WallProblem& problem, const ReferenceScales& scales) {
  problem.validate();
  scales.validate();

  DimensionlessProblem dp;
  dp.k_star = problem.material.k / scales.k_ref;
  dp.c_star = problem.material.c / scales.c_ref;
  dp.hL_star = problem.hL / scales.h_ref;
  dp.hR_star = problem.hR / scales.h_ref;
  dp.Fo = scales.t_ref_s * scales.k_ref / (scales.c_ref * problem.L_m * problem.L_m);
  dp.Bi = scales.h_ref * problem.L_m / scales.k_ref;
  dp.u0 = problem.T0_K / scales.T_ref_K;
  dp.tf_star = problem.tf_s / scales.t_ref_s;
  dp.L_m = problem.L_m;
  dp.scales = scales;

  const double t_ref = scales.t_ref_s;
  const double T_ref = scales.T_ref_K;
  dp.u_inf_L = [signal = problem.forcing_L, t_ref, T_ref](double t_star) {
    return signal(t_star * t_ref) / T_ref;
  };
  dp.u_inf_R = [signal = problem.forcing_R, t_ref, T_ref](double t_star) {
    return signal(t_star * t_ref) / T_ref;
  };
  return dp;
}

}  // namespace heatident
