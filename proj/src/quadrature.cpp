#include "fvdec/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fvdec/error.hpp"

namespace fvdec {

LegendreValue legendre(int n, long double x) {
  long double p0 = 1.0L, p1 = x;
  if (n == 0) return {1.0L, 0.0L};
  for (int k = 2; k <= n; ++k) {
    const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // (1 - x^2) P_n' = n (P_{n-1} - x P_n)
  const long double d = n * (p0 - x * p1) / (1.0L - x * x);
  return {p1, d};
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const long double pi = std::numbers::pi_v<long double>;
  for (int k = 0; k < n; ++k) {
    long double x = -std::cos(pi * (k + 0.75L) / (n + 0.5L));
    for (int it = 0; it < 100; ++it) {
      const LegendreValue p = legendre(n, x);
      const long double dx = p.value / p.derivative;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const LegendreValue p = legendre(n, x);
    const long double w = 2.0L / ((1.0L - x * x) * p.derivative * p.derivative);
    rule.nodes[k] = static_cast<double>(0.5L * x);
    rule.weights[k] = static_cast<double>(0.5L * w);
  }
  return rule;
}

std::vector<double> gauss_lobatto_nodes(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Lobatto rule needs n >= 1");
  std::vector<double> nodes(n + 1);
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  if (n == 2) nodes[1] = 0.5;
  if (n > 2) {
    // interior nodes are the roots of P_n'
    const long double pi = std::numbers::pi_v<long double>;
    for (int k = 1; k < n; ++k) {
      long double x = -std::cos(pi * k / n);
      for (int it = 0; it < 100; ++it) {
        const LegendreValue p = legendre(n, x);
        // P_n'' from the Legendre ODE: (1 - x^2) P'' = 2x P' - n(n+1) P
        const long double d2 = (2.0L * x * p.derivative - n * (n + 1.0L) * p.value) / (1.0L - x * x);
        const long double dx = p.derivative / d2;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
      }
      nodes[k] = static_cast<double>(0.5L * (x + 1.0L));
    }
  }
  return nodes;
}

}  // namespace fvdec
