#include <cmath>

#include "doctest.h"
#include "fvdec/benchmarks.hpp"

using namespace fvdec;

namespace {

ProblemSpec<2> rp1_along_x() {
  const ProblemSpec<1> p1 = problem_1d("rp1");
  ProblemSpec<2> p;
  p.id = "rp1-2d";
  p.bounds = {0.0, 1.0, 0.0, 0.1};
  p.initial = [init = p1.initial](const Point<2>& x) {
    const Primitive<1> w = init({x[0]});
    return Primitive<2>{w.rho, {w.vel[0], 0.0}, w.p};
  };
  p.boundaries = {BoundaryCondition<2>::transmissive(), BoundaryCondition<2>::transmissive(),
                  BoundaryCondition<2>::periodic(), BoundaryCondition<2>::periodic()};
  p.final_time = p1.final_time;
  return p;
}

}  // namespace

TEST_CASE("grid geometry and ghost layout") {
  const Grid<2> g = make_grid<2>({-1.0, 1.0, 0.0, 1.0}, 20, 10, 3);
  CHECK(g.dx() == doctest::Approx(0.1));
  CHECK(g.dy() == doctest::Approx(0.1));
  CHECK(g.padded_nx() == 26);
  CHECK(g.padded_ny() == 16);
  CHECK(g.x_center(0) == doctest::Approx(-0.95));
  const Grid<1> g1 = make_grid<1>({0.0, 1.0}, 10, 1, 2);
  CHECK(g1.padded_ny() == 1);
  CHECK(CellField<1>(g1).data.size() == 14 * 3);
  CHECK(ghost_width(3) == 2);
  CHECK(ghost_width(5) == 3);
  CHECK(ghost_width(7) == 4);
  CHECK(quadrature_points(5) == 4);
  CHECK_THROWS_AS(ghost_width(4), Error);
}

TEST_CASE("periodic and transmissive ghost fill, idempotent") {
  const GasModel gas{};
  const Grid<2> g = make_grid<2>({0.0, 1.0, 0.0, 1.0}, 6, 5, 3);
  CellField<2> f(g);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 6; ++i) f.set(i, j, conserved_from_primitive<2>({1.0 + i + 10.0 * j, {0.1, 0.2}, 1.0}, gas));
  const Boundaries<2> bc = {BoundaryCondition<2>::periodic(), BoundaryCondition<2>::periodic(),
                            BoundaryCondition<2>::transmissive(), BoundaryCondition<2>::transmissive()};
  fill_ghosts(f, bc, gas);
  CHECK(f.get(-1, 2)[0] == f.get(5, 2)[0]);
  CHECK(f.get(-3, 2)[0] == f.get(3, 2)[0]);
  CHECK(f.get(6, 0)[0] == f.get(0, 0)[0]);
  CHECK(f.get(2, -1)[0] == f.get(2, 0)[0]);
  CHECK(f.get(2, 7)[0] == f.get(2, 4)[0]);
  CHECK(f.get(-2, -2)[0] == f.get(4, 0)[0]);  // corner
  const std::vector<double> once = f.data;
  fill_ghosts(f, bc, gas);
  CHECK(f.data == once);
}

TEST_CASE("inflow ghosts hold the prescribed state") {
  const GasModel gas{};
  const Grid<1> g = make_grid<1>({0.0, 1.0}, 8, 1, 2);
  CellField<1> f(g);
  for (int i = 0; i < 8; ++i) f.set(i, 0, conserved_from_primitive<1>({1.0, {0.0}, 1.0}, gas));
  const Primitive<1> w{2.0, {0.5}, 3.0};
  fill_ghosts(f, {BoundaryCondition<1>::fixed_inflow(w), BoundaryCondition<1>::transmissive()}, gas);
  CHECK(f.get(-1)[0] == 2.0);
  CHECK(f.get(-2)[1] == doctest::Approx(1.0));
}

TEST_CASE("mismatched periodic sides are rejected") {
  CHECK_THROWS_AS(validate_boundaries<1>({BoundaryCondition<1>::periodic(), BoundaryCondition<1>::transmissive()}),
                  Error);
}

TEST_CASE("CFL limits and time step") {
  CHECK(cfl_limit(ForceAlpha{1}, 1) == 1.0);
  CHECK(cfl_limit(ForceAlpha{2}, 1) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(cfl_limit(Rusanov{}, 2) == 0.5);
  CHECK(cfl_limit(ForceAlpha{2}, 2) == doctest::Approx(0.498));
  CHECK(cfl_limit(ForceAlpha{10}, 2) == doctest::Approx(0.299));
  CHECK(cfl_limit(ForceAlpha{2.5}, 2) == doctest::Approx(0.484));
  try {
    cfl_limit(ForceAlpha{1}, 2);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unstable2DConfiguration);
  }

  // Uniform state: dt = C dx / (|u| + c); 2D Rusanov halves it on a square grid.
  const GasModel gas{1.4};
  const Conserved<1> u1 = conserved_from_primitive<1>({1.4, {1.0}, 1.0}, gas);
  CellField<1> f1(make_grid<1>({0.0, 1.0}, 10, 1, 2));
  for (int i = 0; i < 10; ++i) f1.set(i, 0, u1);
  CHECK(compute_dt<1>(f1, Rusanov{}, 0.9, gas) == doctest::Approx(0.9 * 0.1 / 2.0));
  CellField<2> f2(make_grid<2>({0.0, 1.0, 0.0, 1.0}, 10, 10, 2));
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) f2.set(i, j, conserved_from_primitive<2>({1.4, {1.0, 0.0}, 1.0}, gas));
  CHECK(compute_dt<2>(f2, Rusanov{}, 0.9, gas) == doctest::Approx(0.5 * 0.9 * 0.1 / 2.0));
}

TEST_CASE("configuration validation") {
  RunConfig c;
  c.order = 4;
  CHECK_THROWS_AS(validate_config(c, 1), Error);
  c.order = 3;
  c.flux = ForceAlpha{1};
  CHECK_NOTHROW(validate_config(c, 1));
  CHECK_THROWS_AS(validate_config(c, 2), Error);
  c.flux = Hll{};
  c.sigma = 0.0;
  CHECK_THROWS_AS(validate_config(c, 1), Error);
  c.sigma = 0.9;
  c.nx = 0;
  CHECK_THROWS_AS(validate_config(c, 1), Error);
}

TEST_CASE("periodic advection conserves mass, momentum and energy") {
  const ProblemSpec<1> p = problem_1d("advection");
  for (int order : {3, 7}) {
    RunConfig c;
    c.order = order;
    c.flux = ForceAlpha{3};
    c.nx = 64;
    c.final_time = 0.5;
    const Grid<1> g = make_grid<1>(p.bounds, 64, 1, ghost_width(order));
    const CellField<1> u0 = initialize_cell_averages<1>(p.initial, g, order, p.gas);
    const RunResult<1> r = run<1>(p, c);
    REQUIRE_FALSE(r.report.crash);
    CHECK(r.report.final_time == doctest::Approx(0.5).epsilon(1e-15));
    for (int k = 0; k < 3; ++k) {
      double a = 0.0, b = 0.0;
      for (int i = 0; i < 64; ++i) {
        a += u0.get(i)[k];
        b += r.field.get(i)[k];
      }
      CHECK(b == doctest::Approx(a).epsilon(1e-13));
    }
  }
}

TEST_CASE("y-uniform 2D run reproduces the 1D run") {
  const ProblemSpec<1> p1 = problem_1d("rp1");
  const ProblemSpec<2> p2 = rp1_along_x();
  RunConfig c;
  c.order = 5;
  c.flux = ExactRs{};
  c.nx = 50;
  c.fixed_dt = 1e-3;
  c.max_steps = 20;
  const RunResult<1> r1 = run<1>(p1, c);
  c.ny = 4;
  const RunResult<2> r2 = run<2>(p2, c);
  REQUIRE_FALSE(r1.report.crash);
  REQUIRE_FALSE(r2.report.crash);
  CHECK(r1.report.steps == 20);
  double worst = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 50; ++i) {
      const Conserved<1> a = r1.field.get(i);
      const Conserved<2> b = r2.field.get(i, j);
      worst = std::max({worst, std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[3]), std::abs(b[2])});
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("repeated runs are bitwise identical") {
  const ProblemSpec<2> p = problem_2d("explosion");
  RunConfig c;
  c.order = 3;
  c.flux = Hll{};
  c.nx = c.ny = 16;
  c.max_steps = 5;
  const RunResult<2> a = run<2>(p, c), b = run<2>(p, c);
  CHECK(a.field.data == b.field.data);
  CHECK(a.report.steps == 5);
}

TEST_CASE("crashes are reported with cause, time and step") {
  const ProblemSpec<1> p = problem_1d("rp2");
  RunConfig c;
  c.order = 5;
  c.flux = ExactRs{};
  c.sigma = 0.1;
  const RunResult<1> r = run<1>(p, c);
  REQUIRE(r.report.crash);
  CHECK(r.report.crash->step > 0);
  CHECK(r.report.crash->time > 0.0);
  CHECK(r.report.crash->time < p.final_time);
  CHECK(r.report.crash->cause.find("negative") != std::string::npos);
  CHECK(r.report.crash->cause.find(" at ") != std::string::npos);
}
