#pragma once

// Ideal-gas Euler equations in one and two space dimensions: state
// conversions, physical fluxes, wave speeds and normal eigenstructure.

#include <array>
#include <cmath>
#include <cstddef>

#include "fvdec/error.hpp"

namespace fvdec {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

template <std::size_t N>
constexpr Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r{};
  for (std::size_t k = 0; k < N; ++k) r[k] = a[k] + b[k];
  return r;
}

template <std::size_t N>
constexpr Vec<N> operator-(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r{};
  for (std::size_t k = 0; k < N; ++k) r[k] = a[k] - b[k];
  return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(double s, const Vec<N>& a) {
  Vec<N> r{};
  for (std::size_t k = 0; k < N; ++k) r[k] = s * a[k];
  return r;
}

template <std::size_t N>
constexpr Vec<N> mat_vec(const Mat<N>& m, const Vec<N>& v) {
  Vec<N> r{};
  for (std::size_t a = 0; a < N; ++a) {
    double s = 0.0;
    for (std::size_t b = 0; b < N; ++b) s += m[a][b] * v[b];
    r[a] = s;
  }
  return r;
}

template <std::size_t N>
constexpr Mat<N> mat_mul(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r{};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k) s += x[a][k] * y[k][b];
      r[a][b] = s;
    }
  return r;
}

struct GasModel {
  double gamma = 1.4;
};

/// Number of conserved variables: density, Dim momenta, total energy.
template <int Dim>
inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Dim) + 2;

/// Conserved variables (rho, rho*u[, rho*v], E).  Admissibility is not
/// enforced here; see is_admissible().
template <int Dim>
using Conserved = Vec<kNumVars<Dim>>;

template <int Dim>
struct Primitive {
  double rho = 1.0;
  std::array<double, Dim> vel{};
  double p = 1.0;
};

/// Direction cosines of a face normal.  Only axis-aligned normals are used by
/// the solver.
struct UnitNormal {
  double nu1 = 1.0;
  double nu2 = 0.0;

  static constexpr UnitNormal x() { return {1.0, 0.0}; }
  static constexpr UnitNormal y() { return {0.0, 1.0}; }
};

template <int Dim>
struct EigenDecomposition {
  Vec<kNumVars<Dim>> wave_speeds{};  // ascending: vn - c, vn, [vn,] vn + c
  Mat<kNumVars<Dim>> left{};         // rows are left eigenvectors
  Mat<kNumVars<Dim>> right{};        // columns are right eigenvectors
};

template <int Dim>
Primitive<Dim> primitive_from_conserved(const Conserved<Dim>& u, const GasModel& gas);

template <int Dim>
Conserved<Dim> conserved_from_primitive(const Primitive<Dim>& w, const GasModel& gas);

/// Pressure from conserved variables; no admissibility check.
template <int Dim>
double pressure(const Conserved<Dim>& u, const GasModel& gas);

/// rho > 0 and p > 0 (equivalently internal energy > 0), and all finite.
template <int Dim>
bool is_admissible(const Conserved<Dim>& u, const GasModel& gas);

/// Throws UnphysicalState naming the offending quantity ("negative density"
/// or "negative pressure") unless the state is admissible.
template <int Dim>
void require_admissible(const Conserved<Dim>& u, const GasModel& gas);

/// nu1 * f(u) + nu2 * g(u).  Pure evaluation: non-admissible states are
/// accepted as long as rho != 0.
template <int Dim>
Conserved<Dim> physical_flux(const Conserved<Dim>& u, UnitNormal n, const GasModel& gas);

double sound_speed(double rho, double p, const GasModel& gas);

template <int Dim>
double sound_speed(const Primitive<Dim>& w, const GasModel& gas) {
  return sound_speed(w.rho, w.p, gas);
}

/// |u . nu| + c from a conserved state (Davis estimate).
template <int Dim>
double max_wave_speed(const Conserved<Dim>& u, UnitNormal n, const GasModel& gas);

template <int Dim>
EigenDecomposition<Dim> eigen_decomposition(const Conserved<Dim>& u, UnitNormal n,
                                            const GasModel& gas);

}  // namespace fvdec
