#include "fvdec/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fvdec {

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr double kNewtonTolerance = 1e-12;
constexpr double kPressureFloor = 1e-300;

struct SideFunction {
  double value;
  double derivative;
};

// Toro's f_K and its derivative.
SideFunction side_function(double p, const Primitive<1>& s, double c, const GasModel& gas) {
  const double g = gas.gamma;
  if (p > s.p) {
    const double a = 2.0 / ((g + 1.0) * s.rho);
    const double b = (g - 1.0) / (g + 1.0) * s.p;
    const double q = std::sqrt(a / (p + b));
    return {(p - s.p) * q, q * (1.0 - 0.5 * (p - s.p) / (b + p))};
  }
  const double ratio = p / s.p;
  const double z = (g - 1.0) / (2.0 * g);
  return {2.0 * c / (g - 1.0) * (std::pow(ratio, z) - 1.0),
          std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (s.rho * c)};
}

void require_positive(const Primitive<1>& s, const char* side) {
  if (!(s.rho > 0.0))
    throw Error(ErrorCode::UnphysicalState,
                std::string("negative density in ") + side + " Riemann state");
  if (!(s.p > 0.0))
    throw Error(ErrorCode::UnphysicalState,
                std::string("negative pressure in ") + side + " Riemann state");
}

double initial_guess(const Primitive<1>& l, const Primitive<1>& r, double cl, double cr,
                     const GasModel& gas) {
  const double g = gas.gamma;
  const double z = (g - 1.0) / (2.0 * g);
  const double num = cl + cr - 0.5 * (g - 1.0) * (r.vel[0] - l.vel[0]);
  const double den = cl / std::pow(l.p, z) + cr / std::pow(r.p, z);
  const double p_tr = std::pow(num / den, 1.0 / z);
  if (p_tr > 0.0 && std::isfinite(p_tr)) return p_tr;
  const double p_pv = 0.5 * (l.p + r.p) -
                      0.125 * (r.vel[0] - l.vel[0]) * (l.rho + r.rho) * (cl + cr);
  return std::max(p_pv, kPressureFloor);
}

double bisect(const Primitive<1>& l, const Primitive<1>& r, const GasModel& gas) {
  double lo = kPressureFloor;
  double hi = std::max(l.p, r.p);
  while (pressure_function(hi, l, r, gas) < 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw Error(ErrorCode::NoConvergence, "exact Riemann solver: no pressure bracket");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pressure_function(mid, l, r, gas) < 0.0) lo = mid; else hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double pressure_function(double p, const Primitive<1>& left, const Primitive<1>& right,
                         const GasModel& gas) {
  const double cl = sound_speed(left, gas);
  const double cr = sound_speed(right, gas);
  return side_function(p, left, cl, gas).value + side_function(p, right, cr, gas).value +
         (right.vel[0] - left.vel[0]);
}

StarState solve_star(const Primitive<1>& left, const Primitive<1>& right, const GasModel& gas) {
  require_positive(left, "left");
  require_positive(right, "right");
  const double g = gas.gamma;
  const double cl = sound_speed(left, gas);
  const double cr = sound_speed(right, gas);
  const double du = right.vel[0] - left.vel[0];
  if (!(2.0 * (cl + cr) / (g - 1.0) > du))
    throw Error(ErrorCode::VacuumGenerated, "exact Riemann solver: vacuum generated");

  StarState s;
  double p = initial_guess(left, right, cl, cr, gas);
  bool converged = false;
  for (int it = 1; it <= kMaxNewtonIterations; ++it) {
    const SideFunction fl = side_function(p, left, cl, gas);
    const SideFunction fr = side_function(p, right, cr, gas);
    double next = p - (fl.value + fr.value + du) / (fl.derivative + fr.derivative);
    if (!(next > 0.0)) next = kPressureFloor;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    s.iterations = it;
    if (change <= kNewtonTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged || !std::isfinite(p)) p = bisect(left, right, gas);

  const SideFunction fl = side_function(p, left, cl, gas);
  const SideFunction fr = side_function(p, right, cr, gas);
  s.p_star = p;
  s.u_star = 0.5 * (left.vel[0] + right.vel[0]) + 0.5 * (fr.value - fl.value);

  const double g6 = (g - 1.0) / (g + 1.0);
  auto star_density = [&](const Primitive<1>& k, WaveKind& kind) {
    const double ratio = p / k.p;
    if (p > k.p) {
      kind = WaveKind::Shock;
      return k.rho * (ratio + g6) / (g6 * ratio + 1.0);
    }
    kind = WaveKind::Rarefaction;
    return k.rho * std::pow(ratio, 1.0 / g);
  };
  s.rho_star_left = star_density(left, s.wave_left);
  s.rho_star_right = star_density(right, s.wave_right);
  return s;
}

Primitive<1> sample(const StarState& star, const Primitive<1>& left, const Primitive<1>& right,
                    double xi, const GasModel& gas) {
  const double g = gas.gamma;
  const double g1 = (g - 1.0) / (2.0 * g);
  const double g2 = (g + 1.0) / (2.0 * g);
  const double g4 = 2.0 / (g + 1.0);
  const double g5 = 2.0 / (g - 1.0);
  const double g7 = (g - 1.0) / 2.0;
  const double ps = star.p_star;
  const double us = star.u_star;

  auto make = [](double rho, double u, double p) {
    Primitive<1> w;
    w.rho = rho;
    w.vel[0] = u;
    w.p = p;
    return w;
  };

  if (xi <= us) {
    const double cl = sound_speed(left, gas);
    const double ul = left.vel[0];
    if (star.wave_left == WaveKind::Shock) {
      const double sl = ul - cl * std::sqrt(g2 * ps / left.p + g1);
      if (xi <= sl) return left;
      return make(star.rho_star_left, us, ps);
    }
    const double head = ul - cl;
    if (xi <= head) return left;
    const double cs = cl * std::pow(ps / left.p, g1);
    const double tail = us - cs;
    if (xi > tail) return make(star.rho_star_left, us, ps);
    // inside the left fan
    const double c = g4 * (cl + g7 * (ul - xi));
    return make(left.rho * std::pow(c / cl, g5), g4 * (cl + g7 * ul + xi),
                left.p * std::pow(c / cl, 1.0 / g1));
  }

  const double cr = sound_speed(right, gas);
  const double ur = right.vel[0];
  if (star.wave_right == WaveKind::Shock) {
    const double sr = ur + cr * std::sqrt(g2 * ps / right.p + g1);
    if (xi >= sr) return right;
    return make(star.rho_star_right, us, ps);
  }
  const double head = ur + cr;
  if (xi >= head) return right;
  const double cs = cr * std::pow(ps / right.p, g1);
  const double tail = us + cs;
  if (xi <= tail) return make(star.rho_star_right, us, ps);
  const double c = g4 * (cr - g7 * (ur - xi));
  return make(right.rho * std::pow(c / cr, g5), g4 * (-cr + g7 * ur + xi),
              right.p * std::pow(c / cr, 1.0 / g1));
}

template <int Dim>
Conserved<Dim> godunov_flux(const Conserved<Dim>& uL, const Conserved<Dim>& uR, UnitNormal n,
                            const GasModel& gas) {
  require_admissible<Dim>(uL, gas);
  require_admissible<Dim>(uR, gas);
  const Primitive<Dim> wl = primitive_from_conserved<Dim>(uL, gas);
  const Primitive<Dim> wr = primitive_from_conserved<Dim>(uR, gas);

  auto normal_velocity = [&](const Primitive<Dim>& w) {
    if constexpr (Dim == 1) return w.vel[0] * n.nu1;
    else return w.vel[0] * n.nu1 + w.vel[1] * n.nu2;
  };
  Primitive<1> l, r;
  l.rho = wl.rho; l.vel[0] = normal_velocity(wl); l.p = wl.p;
  r.rho = wr.rho; r.vel[0] = normal_velocity(wr); r.p = wr.p;

  const StarState star = solve_star(l, r, gas);
  const Primitive<1> s = sample(star, l, r, 0.0, gas);

  Primitive<Dim> w;
  w.rho = s.rho;
  w.p = s.p;
  if constexpr (Dim == 1) {
    w.vel[0] = s.vel[0] * n.nu1;
  } else {
    const auto& upwind = (0.0 <= star.u_star) ? wl : wr;
    const double vt = -upwind.vel[0] * n.nu2 + upwind.vel[1] * n.nu1;
    w.vel[0] = s.vel[0] * n.nu1 - vt * n.nu2;
    w.vel[1] = s.vel[0] * n.nu2 + vt * n.nu1;
  }
  return physical_flux<Dim>(conserved_from_primitive<Dim>(w, gas), n, gas);
}

template Conserved<1> godunov_flux<1>(const Conserved<1>&, const Conserved<1>&, UnitNormal,
                                      const GasModel&);
template Conserved<2> godunov_flux<2>(const Conserved<2>&, const Conserved<2>&, UnitNormal,
                                      const GasModel&);

}  // namespace fvdec
