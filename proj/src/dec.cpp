#include "fvdec/dec.hpp"

#include <string>
#include <utility>

#include "fvdec/error.hpp"
#include "fvdec/quadrature.hpp"

namespace fvdec {

namespace {

long double lagrange(const std::vector<double>& nodes, int l, long double t) {
  long double v = 1.0L;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (static_cast<int>(k) == l) continue;
    v *= (t - nodes[k]) / (static_cast<long double>(nodes[l]) - nodes[k]);
  }
  return v;
}

}  // namespace

DecCoefficients build_coefficients(int P) {
  if (P < 1)
    throw Error(ErrorCode::InvalidArgument, "DeC order must be >= 1 (got " + std::to_string(P) + ")");
  DecCoefficients c;
  c.order = P;
  c.M = (P + 1) / 2;
  c.nodes = gauss_lobatto_nodes(c.M);
  // Gauss-Legendre with M+1 points integrates the degree-M basis exactly.
  const QuadratureRule rule = gauss_legendre(c.M + 1);
  c.theta.assign(c.M, std::vector<double>(c.M + 1, 0.0));
  for (int m = 1; m <= c.M; ++m) {
    const long double tau = c.nodes[m];
    for (int l = 0; l <= c.M; ++l) {
      long double s = 0.0L;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const long double t = tau * (0.5L + rule.nodes[q]);
        s += rule.weights[q] * lagrange(c.nodes, l, t);
      }
      c.theta[m - 1][l] = static_cast<double>(tau * s);
    }
  }
  return c;
}

std::vector<double> dec_step(const OdeSystem& system, double t_n, std::span<const double> y_n,
                             double dt, const DecCoefficients& coeffs) {
  const int M = coeffs.M;
  const std::size_t n = y_n.size();
  std::vector<std::vector<double>> y(M + 1, std::vector<double>(y_n.begin(), y_n.end()));
  std::vector<std::vector<double>> g(M + 1, std::vector<double>(n));

  system.rhs(t_n, y_n, g[0]);
  for (int p = 1; p <= coeffs.order; ++p) {
    for (int l = 1; l <= M; ++l) {
      if (p == 1 && system.autonomous) {
        g[l] = g[0];
      } else {
        system.rhs(t_n + coeffs.nodes[l] * dt, y[l], g[l]);
      }
    }
    for (int m = 1; m <= M; ++m) {
      const std::vector<double>& th = coeffs.theta[m - 1];
      std::vector<double>& ym = y[m];
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l <= M; ++l) s += th[l] * g[l][k];
        ym[k] = y_n[k] + dt * s;
      }
    }
  }
  return std::move(y[M]);
}

int dec_rhs_evaluations(const DecCoefficients& coeffs, bool autonomous) {
  return 1 + (autonomous ? coeffs.order - 1 : coeffs.order) * coeffs.M;
}

}  // namespace fvdec
