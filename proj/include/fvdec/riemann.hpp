#pragma once

// Exact solver for the Riemann problem of the 1D Euler equations (two
// nonlinear waves separated by a contact) and the Godunov flux built on it.

#include "fvdec/euler.hpp"

namespace fvdec {

enum class WaveKind { Shock, Rarefaction };

struct StarState {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveKind wave_left = WaveKind::Rarefaction;
  WaveKind wave_right = WaveKind::Rarefaction;
  int iterations = 0;
};

/// Solves for the star region.  Newton on the pressure function from a
/// two-rarefaction guess (PVRS when that is not positive); falls back to
/// bisection if Newton has not converged after 100 iterations.
///
/// Throws UnphysicalState for non-positive input density/pressure,
/// VacuumGenerated when the no-vacuum condition fails.
StarState solve_star(const Primitive<1>& left, const Primitive<1>& right, const GasModel& gas);

/// f(p, W_L) + f(p, W_R) + (u_R - u_L).
double pressure_function(double p, const Primitive<1>& left, const Primitive<1>& right,
                         const GasModel& gas);

/// Self-similar solution at xi = x / t.
Primitive<1> sample(const StarState& star, const Primitive<1>& left,
                    const Primitive<1>& right, double xi, const GasModel& gas);

/// Physical flux of the exact solution sampled at xi = 0.  In 2D the Riemann
/// problem is posed in the normal direction and the tangential velocity is
/// carried by the contact.
template <int Dim>
Conserved<Dim> godunov_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR, UnitNormal n,
                            const GasModel& gas);

}  // namespace fvdec
