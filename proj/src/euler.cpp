#include "fvdec/euler.hpp"

#include <string>

namespace fvdec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDensity: return "ZeroDensity";
    case ErrorCode::UnphysicalState: return "UnphysicalState";
    case ErrorCode::VacuumGenerated: return "VacuumGenerated";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Unstable2DConfiguration: return "Unstable2DConfiguration";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SimulationCrash: return "SimulationCrash";
  }
  return "Unknown";
}

namespace {

template <int Dim>
double kinetic_energy_density(const Conserved<Dim>& u) {
  double m2 = 0.0;
  for (int d = 0; d < Dim; ++d) m2 += u[1 + d] * u[1 + d];
  return 0.5 * m2 / u[0];
}

}  // namespace

template <int Dim>
Primitive<Dim> primitive_from_conserved(const Conserved<Dim>& u, const GasModel& gas) {
  if (u[0] == 0.0) throw Error(ErrorCode::ZeroDensity, "zero density in conserved state");
  Primitive<Dim> w;
  w.rho = u[0];
  for (int d = 0; d < Dim; ++d) w.vel[d] = u[1 + d] / u[0];
  w.p = (gas.gamma - 1.0) * (u[Dim + 1] - kinetic_energy_density<Dim>(u));
  return w;
}

template <int Dim>
Conserved<Dim> conserved_from_primitive(const Primitive<Dim>& w, const GasModel& gas) {
  Conserved<Dim> u{};
  u[0] = w.rho;
  double v2 = 0.0;
  for (int d = 0; d < Dim; ++d) {
    u[1 + d] = w.rho * w.vel[d];
    v2 += w.vel[d] * w.vel[d];
  }
  u[Dim + 1] = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * v2;
  return u;
}

template <int Dim>
double pressure(const Conserved<Dim>& u, const GasModel& gas) {
  return (gas.gamma - 1.0) * (u[Dim + 1] - kinetic_energy_density<Dim>(u));
}

template <int Dim>
bool is_admissible(const Conserved<Dim>& u, const GasModel& gas) {
  for (double q : u)
    if (!std::isfinite(q)) return false;
  if (!(u[0] > 0.0)) return false;
  return pressure<Dim>(u, gas) > 0.0;
}

template <int Dim>
void require_admissible(const Conserved<Dim>& u, const GasModel& gas) {
  if (!(u[0] > 0.0))
    throw Error(ErrorCode::UnphysicalState,
                "negative density (rho = " + std::to_string(u[0]) + ")");
  const double p = pressure<Dim>(u, gas);
  if (!(p > 0.0))
    throw Error(ErrorCode::UnphysicalState,
                "negative pressure (p = " + std::to_string(p) + ")");
}

template <int Dim>
Conserved<Dim> physical_flux(const Conserved<Dim>& u, UnitNormal n, const GasModel& gas) {
  const Primitive<Dim> w = primitive_from_conserved<Dim>(u, gas);
  double vn = w.vel[0] * n.nu1;
  if constexpr (Dim == 2) vn += w.vel[1] * n.nu2;
  Conserved<Dim> f{};
  f[0] = u[0] * vn;
  f[1] = u[1] * vn + w.p * n.nu1;
  if constexpr (Dim == 2) f[2] = u[2] * vn + w.p * n.nu2;
  f[Dim + 1] = (u[Dim + 1] + w.p) * vn;
  return f;
}

double sound_speed(double rho, double p, const GasModel& gas) {
  const double ratio = p / rho;
  if (!(ratio > 0.0) || !(rho > 0.0)) {
    const char* what = !(rho > 0.0) ? "negative density" : "negative pressure";
    throw Error(ErrorCode::UnphysicalState,
                std::string(what) + " in sound speed (rho = " + std::to_string(rho) +
                    ", p = " + std::to_string(p) + ")");
  }
  return std::sqrt(gas.gamma * ratio);
}

template <int Dim>
double max_wave_speed(const Conserved<Dim>& u, UnitNormal n, const GasModel& gas) {
  const Primitive<Dim> w = primitive_from_conserved<Dim>(u, gas);
  double vn = w.vel[0] * n.nu1;
  if constexpr (Dim == 2) vn += w.vel[1] * n.nu2;
  return std::abs(vn) + sound_speed(w.rho, w.p, gas);
}

template <int Dim>
EigenDecomposition<Dim> eigen_decomposition(const Conserved<Dim>& u, UnitNormal n,
                                            const GasModel& gas) {
  const Primitive<Dim> w = primitive_from_conserved<Dim>(u, gas);
  const double c = sound_speed(w.rho, w.p, gas);
  const double g1 = gas.gamma - 1.0;
  const double H = (u[Dim + 1] + w.p) / w.rho;
  const double b1 = g1 / (c * c);
  EigenDecomposition<Dim> e;

  if constexpr (Dim == 1) {
    const double n1 = n.nu1;
    const double vel = w.vel[0];
    const double vn = vel * n1;
    const double b2 = 0.5 * b1 * vel * vel;
    e.wave_speeds = {vn - c, vn, vn + c};
    e.right = {{{1.0, 1.0, 1.0},
                {vel - c * n1, vel, vel + c * n1},
                {H - c * vn, 0.5 * vel * vel, H + c * vn}}};
    e.left = {{{0.5 * (b2 + vn / c), 0.5 * (-b1 * vel - n1 / c), 0.5 * b1},
               {1.0 - b2, b1 * vel, -b1},
               {0.5 * (b2 - vn / c), 0.5 * (-b1 * vel + n1 / c), 0.5 * b1}}};
  } else {
    const double n1 = n.nu1, n2 = n.nu2;
    const double vx = w.vel[0], vy = w.vel[1];
    const double vn = vx * n1 + vy * n2;
    const double vt = -vx * n2 + vy * n1;
    const double q2 = vx * vx + vy * vy;
    const double b2 = 0.5 * b1 * q2;
    e.wave_speeds = {vn - c, vn, vn, vn + c};
    // Columns: acoustic (vn - c), entropy, shear, acoustic (vn + c).
    e.right = {{{1.0, 1.0, 0.0, 1.0},
                {vx - c * n1, vx, -n2, vx + c * n1},
                {vy - c * n2, vy, n1, vy + c * n2},
                {H - c * vn, 0.5 * q2, vt, H + c * vn}}};
    e.left = {{{0.5 * (b2 + vn / c), 0.5 * (-b1 * vx - n1 / c), 0.5 * (-b1 * vy - n2 / c),
                0.5 * b1},
               {1.0 - b2, b1 * vx, b1 * vy, -b1},
               {-vt, -n2, n1, 0.0},
               {0.5 * (b2 - vn / c), 0.5 * (-b1 * vx + n1 / c), 0.5 * (-b1 * vy + n2 / c),
                0.5 * b1}}};
  }
  return e;
}

#define FVDEC_INSTANTIATE_EULER(D)                                                      \
  template Primitive<D> primitive_from_conserved<D>(const Conserved<D>&, const GasModel&); \
  template Conserved<D> conserved_from_primitive<D>(const Primitive<D>&, const GasModel&); \
  template double pressure<D>(const Conserved<D>&, const GasModel&);                     \
  template bool is_admissible<D>(const Conserved<D>&, const GasModel&);                  \
  template void require_admissible<D>(const Conserved<D>&, const GasModel&);             \
  template Conserved<D> physical_flux<D>(const Conserved<D>&, UnitNormal, const GasModel&); \
  template double max_wave_speed<D>(const Conserved<D>&, UnitNormal, const GasModel&);  \
  template EigenDecomposition<D> eigen_decomposition<D>(const Conserved<D>&, UnitNormal, \
                                                        const GasModel&);

FVDEC_INSTANTIATE_EULER(1)
FVDEC_INSTANTIATE_EULER(2)

#undef FVDEC_INSTANTIATE_EULER

}  // namespace fvdec
