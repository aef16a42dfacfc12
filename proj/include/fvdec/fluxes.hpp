#pragma once

// Interface fluxes: the centred FORCE-alpha family and the upwind Rusanov,
// HLL and Godunov (exact Riemann solver) fluxes behind one contract.

#include <string>
#include <utility>
#include <variant>

#include "fvdec/euler.hpp"

namespace fvdec {

/// Per-step coupling between mesh and time step for one face direction.
struct FluxContext {
  double mesh_ratio = 1.0;  // d(xi) / dt for the face-normal direction
  GasModel gas{};
  UnitNormal normal = UnitNormal::x();
};

struct ForceAlpha {
  double alpha = 1.0;
};
struct Rusanov {};
struct Hll {};
struct ExactRs {};

using FluxChoice = std::variant<ForceAlpha, Rusanov, Hll, ExactRs>;

/// Parses "force-ALPHA", "rusanov", "hll" or "exact-rs".  Throws
/// InvalidArgument on anything else, including alpha < 1.
FluxChoice parse_flux(const std::string& text);
std::string flux_name(const FluxChoice& flux);

/// Lower and upper signal-speed estimates for HLL.
struct WaveSpeedBounds {
  double lower;
  double upper;
};

template <int Dim>
using HllSpeedEstimator = WaveSpeedBounds (*)(const Conserved<Dim>&, const Conserved<Dim>&,
                                              const FluxContext&);

/// S_L = min(vn_L - c_L, vn_R - c_R), S_R = max(vn_L + c_L, vn_R + c_R).
template <int Dim>
WaveSpeedBounds davis_speeds(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                             const FluxContext& ctx);

template <int Dim>
Conserved<Dim> lxf_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                         const FluxContext& ctx, double alpha);

/// u* for the alpha-scaled Richtmyer flux.
template <int Dim>
Conserved<Dim> richtmyer_state(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                               const FluxContext& ctx, double alpha);

/// f(u*), a pure flux evaluation: u* may have negative density or pressure.
/// Throws ZeroDensity if rho* == 0 and UnphysicalState if u* is not finite.
template <int Dim>
Conserved<Dim> richtmyer_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                               const FluxContext& ctx, double alpha);

template <int Dim>
Conserved<Dim> force_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                           const FluxContext& ctx, double alpha);

template <int Dim>
Conserved<Dim> rusanov_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                            const FluxContext& ctx);

template <int Dim>
Conserved<Dim> hll_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                        const FluxContext& ctx,
                        HllSpeedEstimator<Dim> estimator = &davis_speeds<Dim>);

/// Dispatches on the flux choice.
template <int Dim>
Conserved<Dim> numerical_flux(const FluxChoice& choice, const Conserved<Dim>& uL,
                              const Conserved<Dim>& uR, const FluxContext& ctx);

}  // namespace fvdec
