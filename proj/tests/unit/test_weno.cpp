#include <cmath>
#include <vector>

#include "doctest.h"
#include "fvdec/weno.hpp"

using namespace fvdec;

namespace {

// Exact cell average over [i - 1/2, i + 1/2] of a polynomial with the given
// coefficients (unit cell width).
double poly_average(const std::vector<double>& c, double i) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k)
    s += c[k] * (std::pow(i + 0.5, k + 1) - std::pow(i - 0.5, k + 1)) / (k + 1);
  return s;
}

double poly_value(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::pow(x, k);
  return s;
}

std::vector<double> window_of(const std::vector<double>& c, int r) {
  std::vector<double> w;
  for (int k = -(r - 1); k <= r - 1; ++k) w.push_back(poly_average(c, k));
  return w;
}

}  // namespace

TEST_CASE("linear weights at the right face are the classical rational values") {
  const double right[] = {0.5};
  const auto p3 = ReconstructionPlan::build(3, right);
  CHECK(p3.linear_weights(0)[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p3.linear_weights(0)[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  const auto p5 = ReconstructionPlan::build(5, right);
  const double d5[] = {1.0 / 10, 6.0 / 10, 3.0 / 10};
  for (int l = 0; l < 3; ++l) CHECK(p5.linear_weights(0)[l] == doctest::Approx(d5[l]).epsilon(1e-14));
  const auto p7 = ReconstructionPlan::build(7, right);
  const double d7[] = {1.0 / 35, 12.0 / 35, 18.0 / 35, 4.0 / 35};
  for (int l = 0; l < 4; ++l) CHECK(p7.linear_weights(0)[l] == doctest::Approx(d7[l]).epsilon(1e-13));
  CHECK_FALSE(p7.has_negative_weights());
}

TEST_CASE("order-5 weights at the two-point Gauss nodes") {
  const double pts[] = {-std::sqrt(3.0) / 6.0, std::sqrt(3.0) / 6.0};
  const auto plan = ReconstructionPlan::build(5, pts);
  const double small = (210.0 - std::sqrt(3.0)) / 1080.0, large = (210.0 + std::sqrt(3.0)) / 1080.0;
  CHECK(plan.linear_weights(0)[1] == doctest::Approx(11.0 / 18.0).epsilon(1e-13));
  CHECK(plan.linear_weights(0)[0] == doctest::Approx(large).epsilon(1e-13));
  CHECK(plan.linear_weights(0)[2] == doctest::Approx(small).epsilon(1e-13));
  CHECK(plan.linear_weights(1)[0] == doctest::Approx(small).epsilon(1e-13));
  CHECK(plan.linear_weights(1)[2] == doctest::Approx(large).epsilon(1e-13));
}

TEST_CASE("weights combine the sub-stencil rows into the full-stencil row") {
  const double pts[] = {-0.5, -0.4306, -0.17, 0.3, 0.5};
  for (int order : {3, 5, 7}) {
    const auto plan = ReconstructionPlan::build(order, pts);
    const int r = plan.r();
    for (std::size_t q = 0; q < plan.num_points(); ++q) {
      std::vector<double> combined(plan.stencil_size(), 0.0);
      for (int l = 0; l < r; ++l)
        for (int k = 0; k < r; ++k) combined[l + k] += plan.linear_weights(q)[l] * plan.low_order_rows(q)[l][k];
      for (int k = 0; k < plan.stencil_size(); ++k)
        CHECK(combined[k] == doctest::Approx(plan.high_order_row(q)[k]).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("polynomial exactness of the linear reconstruction") {
  const double pts[] = {-0.5, -0.2, 0.1, 0.5};
  for (int order : {3, 5, 7}) {
    const auto plan = ReconstructionPlan::build(order, pts);
    const int r = plan.r();
    std::vector<double> coeffs;
    for (int k = 0; k <= 2 * r - 2; ++k) coeffs.push_back(0.3 + 0.1 * k * (k % 2 ? -1 : 1));
    const std::vector<double> w = window_of(coeffs, r);
    for (std::size_t q = 0; q < plan.num_points(); ++q) {
      double v = 0.0;
      for (int k = 0; k < plan.stencil_size(); ++k) v += plan.high_order_row(q)[k] * w[k];
      CHECK(v == doctest::Approx(poly_value(coeffs, plan.point(q))).epsilon(1e-12));
    }
  }
}

TEST_CASE("smooth data gives nearly linear weights and high accuracy") {
  const double pts[] = {0.5};
  const auto plan = ReconstructionPlan::build(5, pts);
  double prev = 0.0;
  for (int level = 0; level < 3; ++level) {
    const double h = 0.1 / (1 << level);
    std::vector<double> w;
    for (int k = -2; k <= 2; ++k) w.push_back((std::cos((k - 0.5) * h) - std::cos((k + 0.5) * h)) / h);
    const double err = std::abs(reconstruct_scalar(w, plan, 0) - std::sin(0.5 * h));
    if (level > 0) CHECK(std::log2(prev / err) > 4.5);
    prev = err;
  }
}

TEST_CASE("constant data: zero indicators and exact value") {
  const double pts[] = {-0.5, 0.5};
  const auto plan = ReconstructionPlan::build(7, pts);
  const std::vector<double> w(7, 2.5);
  const SmallVec beta = smoothness_indicators(w, plan);
  for (int l = 0; l < 4; ++l) CHECK(beta[l] == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  std::vector<double> out(2);
  reconstruct_points(w, plan, out);
  CHECK(out[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(out[1] == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("equal indicators return the linear weights") {
  const double betas[] = {0.3, 0.3, 0.3};
  const double d[] = {0.1, 0.6, 0.3};
  const NonlinearWeights nw = nonlinear_weights(betas, d, 1e-6);
  for (int l = 0; l < 3; ++l) CHECK(nw.omega[l] == doctest::Approx(d[l]).epsilon(1e-14));
}

TEST_CASE("a jump suppresses the stencils that cross it") {
  const double pts[] = {0.5};
  const auto plan = ReconstructionPlan::build(5, pts);
  const std::vector<double> w = {1.0, 1.0, 1.0, 0.0, 0.0};  // jump between cells 0 and +1
  const double v = reconstruct_scalar(w, plan, 0);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("invalid plans are rejected") {
  const double ok[] = {0.5};
  const double bad[] = {0.75};
  CHECK_THROWS_AS(ReconstructionPlan::build(4, ok), Error);
  CHECK_THROWS_AS(ReconstructionPlan::build(9, ok), Error);
  CHECK_THROWS_AS(ReconstructionPlan::build(5, bad), Error);
  CHECK_THROWS_AS(ReconstructionPlan::build(5, ok, 0.0), Error);
}

TEST_CASE("cell centre: order 5 has negative weights, order 3 has none at all") {
  const double centre[] = {0.0};
  const auto p5 = ReconstructionPlan::build(5, centre);
  CHECK(p5.linear_weights(0)[0] == doctest::Approx(-9.0 / 80.0).epsilon(1e-13));
  CHECK(p5.linear_weights(0)[1] == doctest::Approx(49.0 / 40.0).epsilon(1e-13));
  CHECK(p5.has_negative_weights());
  CHECK(p5.negative_weight_points() == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(ReconstructionPlan::build(3, centre), Error);
}

TEST_CASE("characteristic reconstruction preserves a constant state") {
  const GasModel gas{};
  const Conserved<1> u = conserved_from_primitive<1>({0.7, {0.4}, 1.3}, gas);
  const double pts[] = {-0.5, 0.5};
  const auto plan = ReconstructionPlan::build(5, pts);
  std::vector<Conserved<1>> window(5, u), out(2);
  reconstruct_characteristic_1d(window, eigen_decomposition<1>(u, UnitNormal::x(), gas), plan, out);
  for (const Conserved<1>& v : out)
    for (int k = 0; k < 3; ++k) CHECK(v[k] == doctest::Approx(u[k]).epsilon(1e-13));
}
