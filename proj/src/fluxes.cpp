#include "fvdec/fluxes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fvdec/riemann.hpp"

namespace fvdec {

FluxChoice parse_flux(const std::string& text) {
  if (text == "rusanov") return Rusanov{};
  if (text == "hll") return Hll{};
  if (text == "exact-rs") return ExactRs{};
  const std::string prefix = "force-";
  if (text.rfind(prefix, 0) == 0) {
    const std::string number = text.substr(prefix.size());
    double alpha = 0.0;
    const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), alpha);
    if (ec == std::errc{} && end == number.data() + number.size() && !number.empty()) {
      if (!(alpha >= 1.0))
        throw Error(ErrorCode::InvalidArgument, "FORCE-alpha requires alpha >= 1: " + text);
      return ForceAlpha{alpha};
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown flux '" + text + "' (expected force-ALPHA, rusanov, hll or exact-rs)");
}

std::string flux_name(const FluxChoice& flux) {
  struct Namer {
    std::string operator()(const ForceAlpha& f) const {
      std::ostringstream os;
      os << "force-" << f.alpha;
      return os.str();
    }
    std::string operator()(const Rusanov&) const { return "rusanov"; }
    std::string operator()(const Hll&) const { return "hll"; }
    std::string operator()(const ExactRs&) const { return "exact-rs"; }
  };
  return std::visit(Namer{}, flux);
}

namespace {

template <int Dim>
double normal_velocity(const Primitive<Dim>& w, UnitNormal n) {
  if constexpr (Dim == 1) return w.vel[0] * n.nu1;
  else return w.vel[0] * n.nu1 + w.vel[1] * n.nu2;
}

}  // namespace

template <int Dim>
WaveSpeedBounds davis_speeds(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                             const FluxContext& ctx) {
  const Primitive<Dim> wl = primitive_from_conserved<Dim>(uL, ctx.gas);
  const Primitive<Dim> wr = primitive_from_conserved<Dim>(uR, ctx.gas);
  const double cl = sound_speed(wl, ctx.gas);
  const double cr = sound_speed(wr, ctx.gas);
  const double vl = normal_velocity(wl, ctx.normal);
  const double vr = normal_velocity(wr, ctx.normal);
  return {std::min(vl - cl, vr - cr), std::max(vl + cl, vr + cr)};
}

template <int Dim>
Conserved<Dim> lxf_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                         const FluxContext& ctx, double alpha) {
  const Conserved<Dim> fl = physical_flux<Dim>(uL, ctx.normal, ctx.gas);
  const Conserved<Dim> fr = physical_flux<Dim>(uR, ctx.normal, ctx.gas);
  const double coeff = ctx.mesh_ratio / alpha;
  Conserved<Dim> out{};
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = 0.5 * (fr[k] + fl[k]) - 0.5 * coeff * (uR[k] - uL[k]);
  return out;
}

template <int Dim>
Conserved<Dim> richtmyer_state(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                               const FluxContext& ctx, double alpha) {
  const Conserved<Dim> fl = physical_flux<Dim>(uL, ctx.normal, ctx.gas);
  const Conserved<Dim> fr = physical_flux<Dim>(uR, ctx.normal, ctx.gas);
  const double coeff = alpha / ctx.mesh_ratio;
  Conserved<Dim> star{};
  for (std::size_t k = 0; k < star.size(); ++k)
    star[k] = 0.5 * (uL[k] + uR[k]) - 0.5 * coeff * (fr[k] - fl[k]);
  return star;
}

template <int Dim>
Conserved<Dim> richtmyer_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                               const FluxContext& ctx, double alpha) {
  const Conserved<Dim> star = richtmyer_state<Dim>(uL, uR, ctx, alpha);
  for (double v : star)
    if (!std::isfinite(v))
      throw Error(ErrorCode::UnphysicalState, "non-finite Richtmyer intermediate state");
  return physical_flux<Dim>(star, ctx.normal, ctx.gas);
}

template <int Dim>
Conserved<Dim> force_alpha(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                           const FluxContext& ctx, double alpha) {
  const Conserved<Dim> lxf = lxf_alpha<Dim>(uL, uR, ctx, alpha);
  const Conserved<Dim> ri = richtmyer_alpha<Dim>(uL, uR, ctx, alpha);
  Conserved<Dim> out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * (lxf[k] + ri[k]);
  return out;
}

template <int Dim>
Conserved<Dim> rusanov_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                            const FluxContext& ctx) {
  require_admissible<Dim>(uL, ctx.gas);
  require_admissible<Dim>(uR, ctx.gas);
  const double s = std::max(max_wave_speed<Dim>(uL, ctx.normal, ctx.gas),
                            max_wave_speed<Dim>(uR, ctx.normal, ctx.gas));
  const Conserved<Dim> fl = physical_flux<Dim>(uL, ctx.normal, ctx.gas);
  const Conserved<Dim> fr = physical_flux<Dim>(uR, ctx.normal, ctx.gas);
  Conserved<Dim> out{};
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * s * (uR[k] - uL[k]);
  return out;
}

template <int Dim>
Conserved<Dim> hll_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR,
                        const FluxContext& ctx, HllSpeedEstimator<Dim> estimator) {
  require_admissible<Dim>(uL, ctx.gas);
  require_admissible<Dim>(uR, ctx.gas);
  const WaveSpeedBounds s = estimator(uL, uR, ctx);
  if (s.lower >= 0.0) return physical_flux<Dim>(uL, ctx.normal, ctx.gas);
  if (s.upper <= 0.0) return physical_flux<Dim>(uR, ctx.normal, ctx.gas);
  const Conserved<Dim> fl = physical_flux<Dim>(uL, ctx.normal, ctx.gas);
  const Conserved<Dim> fr = physical_flux<Dim>(uR, ctx.normal, ctx.gas);
  const double inv = 1.0 / (s.upper - s.lower);
  Conserved<Dim> out{};
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (s.upper * fl[k] - s.lower * fr[k] + s.lower * s.upper * (uR[k] - uL[k])) * inv;
  return out;
}

template <int Dim>
Conserved<Dim> numerical_flux(const FluxChoice& choice, const Conserved<Dim>& uL,
                              const Conserved<Dim>& uR, const FluxContext& ctx) {
  switch (choice.index()) {
    case 0: return force_alpha<Dim>(uL, uR, ctx, std::get<ForceAlpha>(choice).alpha);
    case 1: return rusanov_flux<Dim>(uL, uR, ctx);
    case 2: return hll_flux<Dim>(uL, uR, ctx);
    default: return godunov_flux<Dim>(uL, uR, ctx.normal, ctx.gas);
  }
}

#define FVDEC_INSTANTIATE_FLUXES(D)                                                        \
  template WaveSpeedBounds davis_speeds<D>(const Conserved<D>&, const Conserved<D>&,       \
                                           const FluxContext&);                            \
  template Conserved<D> lxf_alpha<D>(const Conserved<D>&, const Conserved<D>&,             \
                                     const FluxContext&, double);                          \
  template Conserved<D> richtmyer_state<D>(const Conserved<D>&, const Conserved<D>&,       \
                                           const FluxContext&, double);                    \
  template Conserved<D> richtmyer_alpha<D>(const Conserved<D>&, const Conserved<D>&,       \
                                           const FluxContext&, double);                    \
  template Conserved<D> force_alpha<D>(const Conserved<D>&, const Conserved<D>&,           \
                                       const FluxContext&, double);                        \
  template Conserved<D> rusanov_flux<D>(const Conserved<D>&, const Conserved<D>&,          \
                                        const FluxContext&);                               \
  template Conserved<D> hll_flux<D>(const Conserved<D>&, const Conserved<D>&,              \
                                    const FluxContext&, HllSpeedEstimator<D>);             \
  template Conserved<D> numerical_flux<D>(const FluxChoice&, const Conserved<D>&,          \
                                          const Conserved<D>&, const FluxContext&);

FVDEC_INSTANTIATE_FLUXES(1)
FVDEC_INSTANTIATE_FLUXES(2)

#undef FVDEC_INSTANTIATE_FLUXES

}  // namespace fvdec
