#pragma once

// Independent reference implementations used by the unit and acceptance
// tests.  Written from the textbook formulas without calling the library's
// flux or Riemann code.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace oracle {

struct State1 {
  double rho, u, p;
};

inline std::array<double, 3> conserved(const State1& w, double g) {
  return {w.rho, w.rho * w.u, w.p / (g - 1.0) + 0.5 * w.rho * w.u * w.u};
}

inline std::array<double, 3> flux(const std::array<double, 3>& q, double g) {
  const double u = q[1] / q[0];
  const double p = (g - 1.0) * (q[2] - 0.5 * q[0] * u * u);
  return {q[1], q[1] * u + p, (q[2] + p) * u};
}

// Classic FORCE flux: mean of Lax-Friedrichs and two-step Richtmyer.
inline std::array<double, 3> force(const std::array<double, 3>& l, const std::array<double, 3>& r,
                                   double dx_over_dt, double g) {
  const auto fl = flux(l, g);
  const auto fr = flux(r, g);
  std::array<double, 3> lf{}, mid{};
  for (int k = 0; k < 3; ++k) {
    lf[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * dx_over_dt * (r[k] - l[k]);
    mid[k] = 0.5 * (l[k] + r[k]) - 0.5 / dx_over_dt * (fr[k] - fl[k]);
  }
  const auto fm = flux(mid, g);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = 0.5 * (lf[k] + fm[k]);
  return out;
}

// Wave function of one side: shock branch for p > pK, rarefaction otherwise.
inline double wave_function(double p, const State1& w, double g) {
  const double c = std::sqrt(g * w.p / w.rho);
  if (p > w.p) {
    const double A = 2.0 / ((g + 1.0) * w.rho);
    const double B = (g - 1.0) / (g + 1.0) * w.p;
    return (p - w.p) * std::sqrt(A / (p + B));
  }
  return 2.0 * c / (g - 1.0) * (std::pow(p / w.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

struct Star {
  double p, u;
};

// Star pressure by bisection on f_L(p) + f_R(p) + (uR - uL) = 0.
inline Star bisect_star(const State1& l, const State1& r, double g) {
  auto f = [&](double p) { return wave_function(p, l, g) + wave_function(p, r, g) + r.u - l.u; };
  double lo = 1e-14, hi = std::max(l.p, r.p);
  while (f(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  const double p = 0.5 * (lo + hi);
  return {p, 0.5 * (l.u + r.u) + 0.5 * (wave_function(p, r, g) - wave_function(p, l, g))};
}

// Random admissible primitive state.
inline State1 random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rho(0.1, 5.0), u(-3.0, 3.0), p(0.1, 10.0);
  return {rho(rng), u(rng), p(rng)};
}

}  // namespace oracle
