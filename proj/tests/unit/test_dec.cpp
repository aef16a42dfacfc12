#include <cmath>

#include "doctest.h"
#include "fvdec/dec.hpp"
#include "fvdec/error.hpp"
#include "fvdec/quadrature.hpp"

using namespace fvdec;

namespace {

double integrate(const OdeSystem& sys, double y0, double t_end, int steps, const DecCoefficients& c) {
  std::vector<double> y = {y0};
  const double dt = t_end / steps;
  for (int n = 0; n < steps; ++n) y = dec_step(sys, n * dt, y, dt, c);
  return y[0];
}

}  // namespace

TEST_CASE("coefficient layout") {
  for (int P = 1; P <= 8; ++P) {
    const DecCoefficients c = build_coefficients(P);
    CHECK(c.order == P);
    CHECK(c.M == std::max(1, (P + 1) / 2));
    REQUIRE(c.nodes.size() == static_cast<std::size_t>(c.M + 1));
    CHECK(c.nodes.front() == 0.0);
    CHECK(c.nodes.back() == doctest::Approx(1.0));
    for (int m = 1; m <= c.M; ++m) {
      double s = 0.0;
      for (double v : c.theta[m - 1]) s += v;
      CHECK(s == doctest::Approx(c.nodes[m]).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(build_coefficients(0), Error);
}

TEST_CASE("theta integrates polynomials up to degree M exactly") {
  const DecCoefficients c = build_coefficients(6);
  for (int deg = 0; deg <= c.M; ++deg)
    for (int m = 1; m <= c.M; ++m) {
      double q = 0.0;
      for (int l = 0; l <= c.M; ++l) q += c.theta[m - 1][l] * std::pow(c.nodes[l], deg);
      CHECK(q == doctest::Approx(std::pow(c.nodes[m], deg + 1) / (deg + 1)).epsilon(1e-13));
    }
}

TEST_CASE("observed order on y' = -y and on a non-autonomous problem") {
  const OdeSystem decay{[](double, std::span<const double> y, std::span<double> d) { d[0] = -y[0]; }, true};
  const OdeSystem forced{[](double t, std::span<const double> y, std::span<double> d) { d[0] = std::cos(t) - y[0]; },
                         false};
  // Exact solution of y' = cos t - y, y(0) = 0.
  const double exact_forced = 0.5 * (std::cos(1.0) + std::sin(1.0) - std::exp(-1.0));
  for (int P = 2; P <= 7; ++P) {
    const DecCoefficients c = build_coefficients(P);
    const double e1 = std::abs(integrate(decay, 1.0, 1.0, 16, c) - std::exp(-1.0));
    const double e2 = std::abs(integrate(decay, 1.0, 1.0, 32, c) - std::exp(-1.0));
    CHECK(std::log2(e1 / e2) == doctest::Approx(P).epsilon(0.3 / P));
    const double f1 = std::abs(integrate(forced, 0.0, 1.0, 8, c) - exact_forced);
    const double f2 = std::abs(integrate(forced, 0.0, 1.0, 16, c) - exact_forced);
    CHECK(std::log2(f1 / f2) > P - 0.5);
  }
}

TEST_CASE("right-hand-side evaluation count") {
  int calls = 0;
  OdeSystem sys{[&](double, std::span<const double> y, std::span<double> d) {
                  ++calls;
                  d[0] = -y[0];
                },
                true};
  for (int P : {3, 5, 7}) {
    const DecCoefficients c = build_coefficients(P);
    for (bool autonomous : {true, false}) {
      sys.autonomous = autonomous;
      calls = 0;
      std::vector<double> y = {1.0};
      dec_step(sys, 0.0, y, 0.1, c);
      CHECK(calls == dec_rhs_evaluations(c, autonomous));
    }
    CHECK(dec_rhs_evaluations(c, true) == 1 + (P - 1) * c.M);
  }
}

TEST_CASE("quadrature rules") {
  for (int n = 1; n <= 5; ++n) {
    const auto rule = gauss_legendre(n);
    double w = 0.0, x2 = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      w += rule.weights[q];
      x2 += rule.weights[q] * rule.nodes[q] * rule.nodes[q];
    }
    CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    if (n >= 2) CHECK(x2 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  }
  const auto lob = gauss_lobatto_nodes(3);
  CHECK(lob.front() == 0.0);
  CHECK(lob.back() == doctest::Approx(1.0));
  CHECK(lob[1] == doctest::Approx(0.5 - std::sqrt(5.0) / 10.0).epsilon(1e-14));
}
