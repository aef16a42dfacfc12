#pragma once

// Deferred-correction (DeC) time integration of order P with Gauss-Lobatto
// subtimenodes: M = ceil(P/2) subintervals and P explicit correction sweeps.

#include <functional>
#include <span>
#include <vector>

namespace fvdec {

struct DecCoefficients {
  int order = 0;
  int M = 0;
  std::vector<double> nodes;               // tau_0 = 0 < ... < tau_M = 1
  std::vector<std::vector<double>> theta;  // theta[m-1][l] = int_0^{tau_m} phi_l, m = 1..M
};

DecCoefficients build_coefficients(int P);

/// dydt = G(t, y).  Must not modify y.
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct OdeSystem {
  OdeRhs rhs;
  // When G does not depend on t explicitly, the first sweep reuses G(t_n, y_n)
  // at every subtimenode.
  bool autonomous = false;
};

/// One DeC step from t_n to t_n + dt.  Errors thrown by the right-hand side
/// propagate unchanged.
std::vector<double> dec_step(const OdeSystem& system, double t_n, std::span<const double> y_n,
                             double dt, const DecCoefficients& coeffs);

/// Number of right-hand-side evaluations dec_step performs.
int dec_rhs_evaluations(const DecCoefficients& coeffs, bool autonomous);

}  // namespace fvdec
