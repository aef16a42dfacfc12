#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fvdec/io.hpp"

using namespace fvdec;

TEST_CASE("field CSV round trip is exact") {
  const ProblemSpec<2> p = problem_2d("vortex");
  const Grid<2> g = make_grid<2>(p.bounds, 6, 5, 2);
  CellField<2> f = initialize_cell_averages<2>(p.initial, g, 3, p.gas);
  f.time = 0.125;
  std::stringstream ss;
  write_field_csv<2>(ss, f, p.gas, {{"problem", "vortex"}});
  Manifest m;
  const CellField<2> back = read_field_csv<2>(ss, &m);
  CHECK(manifest_value(m, "problem") == "vortex");
  CHECK(manifest_value(m, "nx") == "6");
  CHECK(back.time == 0.125);
  CHECK(back.grid.x_min == g.x_min);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 6; ++i) CHECK(back.get(i, j) == f.get(i, j));
}

TEST_CASE("field CSV layout") {
  const Grid<1> g = make_grid<1>({0.0, 1.0}, 2, 1, 2);
  CellField<1> f(g);
  const GasModel gas{};
  f.set(0, 0, conserved_from_primitive<1>({1.0, {2.0}, 0.4}, gas));
  f.set(1, 0, conserved_from_primitive<1>({1.0, {0.0}, 0.4}, gas));
  std::stringstream ss;
  write_field_csv<1>(ss, f, gas, {});
  std::string line, last;
  while (std::getline(ss, line))
    if (!line.empty() && line[0] != '#') last = last.empty() ? line : last;
  CHECK(last == "x,rho,mx,E,u,p");
  std::stringstream again(ss.str());
  CHECK_THROWS_AS(read_field_csv<2>(again), Error);
}

TEST_CASE("convergence table marks crashes and undefined orders") {
  ConvergenceRow a;
  a.n = 40;
  a.errors = {1e-2, 2e-2, 3e-2};
  ConvergenceRow b;
  b.n = 80;
  b.crash = "negative density";
  std::stringstream ss;
  write_convergence_csv(ss, {a, b}, {{"flux", "hll"}});
  const std::string s = ss.str();
  CHECK(s.find("# crash N=80 = negative density") != std::string::npos);
  CHECK(s.find("N,L1,order,L2,order,Linf,order,cpu_time") != std::string::npos);
  CHECK(s.find("40,0.01,-,0.02,-,0.029999999999999999,-,") != std::string::npos);
  CHECK(s.find("80,crash,-,crash,-,crash,-,") != std::string::npos);
}

TEST_CASE("stability sweep summary") {
  const std::vector<SweepRow> rows = {{0.1, true, 10, 0.1, ""}, {0.3, false, 3, 0.01, "negative, density"},
                                      {0.2, true, 5, 0.1, ""}};
  CHECK(max_stable_sigma(rows) == 0.2);
  std::stringstream ss;
  write_sweep_csv(ss, rows, {});
  CHECK(ss.str().find("# max_stable_sigma = 0.20000000000000001") != std::string::npos);
  CHECK(ss.str().find("0.29999999999999999,crashed,3,0.01,negative; density") != std::string::npos);
}

TEST_CASE("manifest parsing") {
  std::stringstream ss("# a = 1\n# b = x y\n# no separator\nrest\n");
  const Manifest m = read_manifest(ss);
  CHECK(manifest_value(m, "b") == "x y");
  CHECK_THROWS_AS(manifest_value(m, "c"), Error);
  std::string rest;
  std::getline(ss, rest);
  CHECK(rest == "rest");
}

TEST_CASE("stored shock-turbulence reference parses") {
  std::ifstream is(FVDEC_DATA_DIR "/shock_turbulence_reference/profile.csv");
  REQUIRE(is);
  const Manifest m = read_manifest(is);
  CHECK(manifest_value(m, "problem") == "shock-turbulence");
  CHECK(manifest_value(m, "cells") == "20000x1");
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,rho,u,p");
  int rows = 0;
  double x_prev = -1e300;
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    const double x = std::stod(cell);
    std::getline(ss, cell, ',');
    const double rho = std::stod(cell);
    CHECK(x > x_prev);
    CHECK((rho > 0.5 && rho < 5.0));
    x_prev = x;
    ++rows;
  }
  CHECK(rows == 20000);
}
