#include <cmath>
#include <random>

#include "doctest.h"
#include "fvdec/euler.hpp"
#include "../oracles.hpp"

using namespace fvdec;

namespace {

template <int Dim>
Primitive<Dim> random_primitive(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rho(0.1, 5.0), u(-3.0, 3.0), p(0.1, 10.0);
  Primitive<Dim> w;
  w.rho = rho(rng);
  for (int d = 0; d < Dim; ++d) w.vel[d] = u(rng);
  w.p = p(rng);
  return w;
}

}  // namespace

TEST_CASE("primitive and conserved conversions round trip") {
  std::mt19937_64 rng(1);
  const GasModel gas{1.4};
  for (int s = 0; s < 200; ++s) {
    const Primitive<2> w = random_primitive<2>(rng);
    const Primitive<2> back = primitive_from_conserved<2>(conserved_from_primitive<2>(w, gas), gas);
    CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-14));
    CHECK(back.vel[0] == doctest::Approx(w.vel[0]).epsilon(1e-13));
    CHECK(back.vel[1] == doctest::Approx(w.vel[1]).epsilon(1e-13));
    CHECK(back.p == doctest::Approx(w.p).epsilon(1e-12));
  }
}

TEST_CASE("zero density and negative pressure are rejected") {
  const GasModel gas{};
  CHECK_THROWS_AS(primitive_from_conserved<1>(Conserved<1>{0.0, 1.0, 1.0}, gas), Error);
  try {
    primitive_from_conserved<1>(Conserved<1>{0.0, 1.0, 1.0}, gas);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDensity);
  }
  const Conserved<1> bad{1.0, 2.0, 1.0};  // kinetic energy exceeds total energy
  CHECK_FALSE(is_admissible<1>(bad, gas));
  try {
    require_admissible<1>(bad, gas);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnphysicalState);
    CHECK(std::string(e.what()).find("negative pressure") != std::string::npos);
  }
}

TEST_CASE("physical flux matches the independent formula in 1D") {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 100; ++s) {
    const oracle::State1 w = oracle::random_state(rng);
    const auto q = oracle::conserved(w, 1.4);
    const auto ref = oracle::flux(q, 1.4);
    const Conserved<1> f = physical_flux<1>({q[0], q[1], q[2]}, UnitNormal::x(), GasModel{1.4});
    for (int k = 0; k < 3; ++k) CHECK(f[k] == doctest::Approx(ref[k]).epsilon(1e-13));
  }
}

TEST_CASE("rotated 2D flux equals the combination of x and y fluxes") {
  std::mt19937_64 rng(3);
  const GasModel gas{};
  const Conserved<2> u = conserved_from_primitive<2>(random_primitive<2>(rng), gas);
  const double th = 0.7;
  const UnitNormal n{std::cos(th), std::sin(th)};
  const Conserved<2> f = physical_flux<2>(u, n, gas);
  const Conserved<2> fx = physical_flux<2>(u, UnitNormal::x(), gas);
  const Conserved<2> fy = physical_flux<2>(u, UnitNormal{0.0, 1.0}, gas);
  for (int k = 0; k < 4; ++k) CHECK(f[k] == doctest::Approx(n.nu1 * fx[k] + n.nu2 * fy[k]).epsilon(1e-13));
}

TEST_CASE_TEMPLATE("eigenvectors diagonalize the finite-difference flux Jacobian", T,
                   std::integral_constant<int, 1>, std::integral_constant<int, 2>) {
  constexpr int Dim = T::value;
  constexpr std::size_t N = kNumVars<Dim>;
  std::mt19937_64 rng(4 + Dim);
  const GasModel gas{1.4};
  for (int s = 0; s < 20; ++s) {
    const Conserved<Dim> u = conserved_from_primitive<Dim>(random_primitive<Dim>(rng), gas);
    const double th = 0.3 * s;
    const UnitNormal n = Dim == 1 ? UnitNormal::x() : UnitNormal{std::cos(th), std::sin(th)};
    const EigenDecomposition<Dim> e = eigen_decomposition<Dim>(u, n, gas);

    // L R = I
    const Mat<N> lr = mat_mul(e.left, e.right);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) CHECK(lr[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-11));

    // Central-difference Jacobian against R diag(lambda) L.
    Mat<N> jac{};
    for (std::size_t j = 0; j < N; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(u[j]));
      Conserved<Dim> up = u, um = u;
      up[j] += h;
      um[j] -= h;
      const Conserved<Dim> fp = physical_flux<Dim>(up, n, gas), fm = physical_flux<Dim>(um, n, gas);
      for (std::size_t i = 0; i < N; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        double a = 0.0;
        for (std::size_t k = 0; k < N; ++k) a += e.right[i][k] * e.wave_speeds[k] * e.left[k][j];
        CHECK(a == doctest::Approx(jac[i][j]).epsilon(1e-6).scale(10.0));
      }
    for (std::size_t k = 1; k < N; ++k) CHECK(e.wave_speeds[k - 1] <= e.wave_speeds[k]);
  }
}

TEST_CASE("sound speed and maximum wave speed") {
  const GasModel gas{1.4};
  CHECK(sound_speed(1.0, 1.0, gas) == doctest::Approx(std::sqrt(1.4)));
  const Conserved<2> u = conserved_from_primitive<2>({1.0, {3.0, -4.0}, 1.0}, gas);
  CHECK(max_wave_speed<2>(u, UnitNormal{0.0, 1.0}, gas) == doctest::Approx(4.0 + std::sqrt(1.4)));
}
