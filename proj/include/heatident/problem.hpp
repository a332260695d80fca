#pragma once

#include <functional>

#include "heatident/forcing.hpp"
#include "heatident/material.hpp"

namespace heatident {

/// Reference magnitudes used to cast the field problem in dimensionless form.
/// All entries must be strictly positive.
struct ReferenceScales {
  double t_ref_s = 3600.0;
  double T_ref_K = 273.15;
  double k_ref = 1.0;    ///< W/(m K)
  double c_ref = 1.5e6;  ///< J/(m^3 K)
  double h_ref = 5.0;    ///< W/(m^2 K)

  void validate() const;
};

/**
 * Single-layer wall with Robin exchange on both faces.
 *
 * The slab occupies x in [0, L]; ambient signals forcing_L / forcing_R drive
 * the two faces through the surface coefficients hL / hR. The initial state
 * is the uniform temperature T0 (absolute Kelvin).
 */
struct WallProblem {
  double L_m = 0.22;
  double hL = 15.0;  ///< W/(m^2 K), x = 0 face
  double hR = 5.0;   ///< W/(m^2 K), x = L face
  double T0_K = 293.15;
  ForcingSignal forcing_L = ForcingSignal::preset_left();
  ForcingSignal forcing_R = ForcingSignal::preset_right();
  double tf_s = 72000.0;
  Material material;

  void validate() const;
};

/**
 * Dimensionless restatement of a WallProblem.
 *
 * u = T/T_ref, t* = t/t_ref, x* = x/L. The parameter group is
 * k* = k/k_ref, c* = c/c_ref, h* = h/h_ref together with
 * Fo = t_ref k_ref / (c_ref L^2) and Bi = h_ref L / k_ref, so the field
 * equation reads c* du/dt* = Fo k* d2u/dx*^2 with Robin data scaled by
 * Bi h*. The geometry and scales are retained so results can be mapped
 * back to seconds and Kelvin.
 */
struct DimensionlessProblem {
  double k_star = 1.0;
  double c_star = 1.0;
  double hL_star = 1.0;
  double hR_star = 1.0;
  double Fo = 0.0;  ///< Fourier number
  double Bi = 0.0;  ///< Biot number
  double u0 = 1.0;
  double tf_star = 0.0;
  std::function<double(double)> u_inf_L;  ///< of t*
  std::function<double(double)> u_inf_R;  ///< of t*
  double L_m = 0.0;
  ReferenceScales scales;
};

/// Scales a WallProblem by the reference magnitudes. Throws
/// std::invalid_argument when either input violates its invariants.
DimensionlessProblem nondimensionalize(const WallProblem& problem,
                                       const ReferenceScales& scales = {});

}  // namespace heatident
