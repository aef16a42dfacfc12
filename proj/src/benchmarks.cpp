#include "fvdec/benchmarks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "fvdec/riemann.hpp"

namespace fvdec {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double lo, double hi) {
  const double len = hi - lo;
  return x - len * std::floor((x - lo) / len);
}

// Offset from c to x on a periodic interval, taken to the nearest image.
double periodic_offset(double x, double c, double len) {
  const double d = x - c;
  return d - len * std::round(d / len);
}

template <int Dim>
Boundaries<Dim> all_sides(const BoundaryCondition<Dim>& bc) {
  Boundaries<Dim> out;
  out.fill(bc);
  return out;
}

Primitive<2> isentropic_vortex(double dx, double dy, const GasModel& gas) {
  constexpr double beta = 5.0;
  const double g = gas.gamma;
  const double r2 = dx * dx + dy * dy;
  const double dT = -(g - 1.0) * beta * beta / (8.0 * g * kPi * kPi) * std::exp(1.0 - r2);
  const double swirl = beta / (2.0 * kPi) * std::exp(0.5 * (1.0 - r2));
  Primitive<2> w;
  w.rho = std::pow(1.0 + dT, 1.0 / (g - 1.0));
  w.p = std::pow(1.0 + dT, g / (g - 1.0));
  w.vel = {1.0 - swirl * dy, 1.0 + swirl * dx};
  return w;
}

ProblemSpec<2> vortex_problem(const std::string& id, double half_width, double final_time,
                              const GasModel& gas) {
  ProblemSpec<2> p;
  p.id = id;
  p.gas = gas;
  p.bounds = {-half_width, half_width, -half_width, half_width};
  p.boundaries = all_sides<2>(BoundaryCondition<2>::periodic());
  p.final_time = final_time;
  const double len = 2.0 * half_width;
  p.exact = [gas, len](const Point<2>& x, double t) {
    return isentropic_vortex(periodic_offset(x[0], t, len), periodic_offset(x[1], t, len), gas);
  };
  p.initial = [exact = p.exact](const Point<2>& x) { return exact(x, 0.0); };
  return p;
}

ProblemSpec<2> shock_vortex_problem(const std::string& id, bool with_vortex, const GasModel& gas) {
  ShockVortexParams params;
  params.gamma = gas.gamma;
  const Primitive<2> up = shock_vortex_upstream(params);
  const Primitive<2> down = shock_vortex_downstream(params);
  ProblemSpec<2> p;
  p.id = id;
  p.gas = gas;
  p.bounds = {0.0, 2.0, 0.0, 1.0};
  p.boundaries = {BoundaryCondition<2>::fixed_inflow(up), BoundaryCondition<2>::transmissive(),
                  BoundaryCondition<2>::transmissive(), BoundaryCondition<2>::transmissive()};
  p.final_time = 0.69;
  p.initial = [params, up, down, with_vortex](const Point<2>& x) {
    if (x[0] >= 0.5) return down;
    if (!with_vortex) return up;
    const double dx = x[0] - params.xc, dy = x[1] - params.yc;
    const double r = std::hypot(dx, dy);
    if (r >= params.b) return up;
    const double g = params.gamma;
    const double t_iii = up.p / (up.rho * params.gas_constant);
    const double ratio = shock_vortex_temperature(r, params) / t_iii;
    const double vt = shock_vortex_swirl(r, params);
    Primitive<2> w;
    w.rho = up.rho * std::pow(ratio, 1.0 / (g - 1.0));
    w.p = up.p * std::pow(ratio, g / (g - 1.0));
    // -v sin(theta) = -v dy / r, v cos(theta) = v dx / r
    const double s = r > 0.0 ? vt / r : 0.0;
    w.vel = {up.vel[0] - s * dy, up.vel[1] + s * dx};
    return w;
  };
  return p;
}

}  // namespace

std::vector<std::string> problem_ids() {
  return {"advection",  "rp1",         "rp2",       "rp3",          "rp4",
          "rp5",        "shock-turbulence", "vortex", "vortex-long", "explosion",
          "shock-vortex", "shock-vortex-base"};
}

int problem_dimension(const std::string& id) {
  static const std::vector<std::string> one = {"advection", "rp1", "rp2", "rp3",
                                               "rp4",       "rp5", "shock-turbulence"};
  static const std::vector<std::string> two = {"vortex", "vortex-long", "explosion",
                                               "shock-vortex", "shock-vortex-base"};
  if (std::find(one.begin(), one.end(), id) != one.end()) return 1;
  if (std::find(two.begin(), two.end(), id) != two.end()) return 2;
  throw Error(ErrorCode::InvalidArgument, "unknown problem '" + id + "'");
}

RiemannData riemann_problem(int k) {
  switch (k) {
    case 1: return {{1.0, {0.75}, 1.0}, {0.125, {0.0}, 0.1}, 0.3, 0.2};
    case 2: return {{1.0, {-2.0}, 0.4}, {1.0, {2.0}, 0.4}, 0.5, 0.15};
    case 3: return {{1.0, {0.0}, 1000.0}, {1.0, {0.0}, 0.01}, 0.5, 0.012};
    case 4:
      return {{5.99924, {19.5975}, 460.894}, {5.99242, {-6.19633}, 46.0950}, 0.4, 0.035};
    case 5: return {{1.0, {-19.59745}, 1000.0}, {1.0, {-19.59745}, 0.01}, 0.8, 0.012};
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "Riemann problem index must be 1..5 (got " + std::to_string(k) + ")");
  }
}

ProblemSpec<1> problem_1d(const std::string& id, const GasModel& gas) {
  if (problem_dimension(id) != 1)
    throw Error(ErrorCode::InvalidArgument, "problem '" + id + "' is two-dimensional");
  ProblemSpec<1> p;
  p.id = id;
  p.gas = gas;
  if (id == "advection") {
    p.bounds = {-1.0, 1.0};
    p.boundaries = all_sides<1>(BoundaryCondition<1>::periodic());
    p.final_time = 2.0;
    p.exact = [](const Point<1>& x, double t) {
      const double s = std::sin(kPi * wrap(x[0] - t, -1.0, 1.0));
      return Primitive<1>{2.0 + s * s * s * s, {1.0}, 1.0};
    };
    p.initial = [exact = p.exact](const Point<1>& x) { return exact(x, 0.0); };
    return p;
  }
  if (id == "shock-turbulence") {
    const Primitive<1> left{1.515695, {0.523346}, 1.80500};
    p.bounds = {-5.0, 5.0};
    p.boundaries = {BoundaryCondition<1>::fixed_inflow(left), BoundaryCondition<1>::transmissive()};
    p.final_time = 5.0;
    p.initial = [left](const Point<1>& x) {
      if (x[0] < -4.5) return left;
      return Primitive<1>{1.0 + 0.1 * std::sin(20.0 * kPi * x[0]), {0.0}, 1.0};
    };
    return p;
  }
  const RiemannData rp = riemann_problem(id[2] - '0');
  p.bounds = {0.0, 1.0};
  p.boundaries = all_sides<1>(BoundaryCondition<1>::transmissive());
  p.final_time = rp.final_time;
  const StarState star = solve_star(rp.left, rp.right, gas);
  p.exact = [rp, star, gas](const Point<1>& x, double t) {
    if (t <= 0.0) return x[0] < rp.x_d ? rp.left : rp.right;
    return sample(star, rp.left, rp.right, (x[0] - rp.x_d) / t, gas);
  };
  p.initial = [rp](const Point<1>& x) { return x[0] < rp.x_d ? rp.left : rp.right; };
  return p;
}

ProblemSpec<2> problem_2d(const std::string& id, const GasModel& gas) {
  if (problem_dimension(id) != 2)
    throw Error(ErrorCode::InvalidArgument, "problem '" + id + "' is one-dimensional");
  if (id == "vortex") return vortex_problem(id, 10.0, 0.1, gas);
  if (id == "vortex-long") return vortex_problem(id, 5.0, 100.0, gas);
  if (id == "shock-vortex") return shock_vortex_problem(id, true, gas);
  if (id == "shock-vortex-base") return shock_vortex_problem(id, false, gas);
  ProblemSpec<2> p;
  p.id = id;
  p.gas = gas;
  p.bounds = {-1.0, 1.0, -1.0, 1.0};
  p.boundaries = all_sides<2>(BoundaryCondition<2>::transmissive());
  p.final_time = 0.25;
  p.initial = [](const Point<2>& x) {
    if (std::hypot(x[0], x[1]) < 0.4) return Primitive<2>{1.0, {0.0, 0.0}, 1.0};
    return Primitive<2>{0.125, {0.0, 0.0}, 0.1};
  };
  return p;
}

Primitive<2> shock_vortex_upstream(const ShockVortexParams& params) {
  return {1.0, {std::sqrt(params.gamma) * params.mach_shock, 0.0}, 1.0};
}

Primitive<2> shock_vortex_downstream(const ShockVortexParams& params) {
  const Primitive<2> up = shock_vortex_upstream(params);
  const double g = params.gamma;
  const double m2 = params.mach_shock * params.mach_shock;
  Primitive<2> w;
  w.rho = (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0) * up.rho;
  w.vel = {((g - 1.0) * m2 + 2.0) / ((g + 1.0) * m2) * up.vel[0], 0.0};
  w.p = (2.0 * g * m2 - (g - 1.0)) / (g + 1.0) * up.p;
  return w;
}

double shock_vortex_swirl(double r, const ShockVortexParams& params) {
  const double vm = params.mach_vortex * std::sqrt(params.gamma);
  const double a = params.a, b = params.b;
  if (r <= a) return vm * r / a;
  if (r < b) return vm * a / (a * a - b * b) * (r - b * b / r);
  return 0.0;
}

double shock_vortex_temperature(double r, const ShockVortexParams& params) {
  const double g = params.gamma;
  const double a = params.a, b = params.b;
  const double vm = params.mach_vortex * std::sqrt(g);
  const Primitive<2> up = shock_vortex_upstream(params);
  const double t_iii = up.p / (up.rho * params.gas_constant);
  const double k = (g - 1.0) / (params.gas_constant * g);
  const double c = k * vm * vm * a * a / ((a * a - b * b) * (a * a - b * b));
  auto annulus = [b](double s) {
    return s * s / 2.0 - 2.0 * b * b * std::log(s) - b * b * b * b / (2.0 * s * s);
  };
  const double B = t_iii - c * annulus(b);
  const double A = B + c * annulus(a) - k * vm * vm / 2.0;
  if (r <= a) return A + k * vm * vm / (a * a) * r * r / 2.0;
  if (r < b) return B + c * annulus(r);
  return t_iii;
}

template <int Dim>
CellField<Dim> exact_cell_averages(const ProblemSpec<Dim>& problem, const Grid<Dim>& grid,
                                   int order, double t) {
  if (!problem.exact)
    throw Error(ErrorCode::InvalidArgument, "problem '" + problem.id + "' has no exact solution");
  const ExactSolution<Dim> exact = problem.exact;
  const InitialCondition<Dim> at_t = [exact, t](const Point<Dim>& x) { return exact(x, t); };
  CellField<Dim> field = initialize_cell_averages<Dim>(at_t, grid, order, problem.gas);
  field.time = t;
  return field;
}

template <int Dim>
ErrorReport error_norms(const CellField<Dim>& numerical, const CellField<Dim>& exact) {
  const Grid<Dim>& a = numerical.grid;
  const Grid<Dim>& b = exact.grid;
  if (a.nx != b.nx || a.ny != b.ny || a.x_min != b.x_min || a.x_max != b.x_max ||
      a.y_min != b.y_min || a.y_max != b.y_max)
    throw Error(ErrorCode::GridMismatch, "error norms need fields on the same grid");
  ErrorReport rep;
  const double vol = a.cell_volume();
  double sq = 0.0;
  for (int j = 0; j < a.ny; ++j)
    for (int i = 0; i < a.nx; ++i) {
      const double e = std::fabs(numerical.data[numerical.offset(i, j)] - exact.data[exact.offset(i, j)]);
      rep.l1 += e * vol;
      sq += e * e * vol;
      rep.linf = std::max(rep.linf, e);
    }
  rep.l2 = std::sqrt(sq);
  return rep;
}

double observed_order(double coarse_error, double fine_error, int coarse_n, int fine_n) {
  return std::log(coarse_error / fine_error) / std::log(static_cast<double>(fine_n) / coarse_n);
}

template <int Dim>
std::vector<ConvergenceRow> convergence_study(const ProblemSpec<Dim>& problem,
                                              const RunConfig& config,
                                              const std::vector<int>& meshes) {
  std::vector<ConvergenceRow> rows;
  for (int n : meshes) {
    RunConfig c = config;
    c.nx = n;
    c.ny = Dim == 2 ? n : 1;
    ConvergenceRow row;
    row.n = n;
    const RunResult<Dim> res = run<Dim>(problem, c);
    row.cpu_seconds = res.report.wall_seconds;
    row.steps = res.report.steps;
    if (res.report.crash) {
      row.crash = res.report.crash->cause;
    } else {
      const CellField<Dim> ex =
          exact_cell_averages<Dim>(problem, res.field.grid, c.order, res.report.final_time);
      row.errors = error_norms<Dim>(res.field, ex);
      if (!rows.empty() && !rows.back().crash) {
        const ConvergenceRow& prev = rows.back();
        row.order_l1 = observed_order(prev.errors.l1, row.errors.l1, prev.n, n);
        row.order_l2 = observed_order(prev.errors.l2, row.errors.l2, prev.n, n);
        row.order_linf = observed_order(prev.errors.linf, row.errors.linf, prev.n, n);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::fabs(a) < std::fabs(b) ? a : b;
}

template <int Dim>
void muscl_faces(const Conserved<Dim>& um, const Conserved<Dim>& u0, const Conserved<Dim>& up,
                 UnitNormal n, const GasModel& gas, Conserved<Dim>& lo, Conserved<Dim>& hi) {
  const EigenDecomposition<Dim> eig = eigen_decomposition<Dim>(u0, n, gas);
  const Conserved<Dim> wm = mat_vec(eig.left, um);
  const Conserved<Dim> w0 = mat_vec(eig.left, u0);
  const Conserved<Dim> wp = mat_vec(eig.left, up);
  Conserved<Dim> half{};
  for (std::size_t k = 0; k < half.size(); ++k) half[k] = 0.5 * minmod(w0[k] - wm[k], wp[k] - w0[k]);
  lo = mat_vec(eig.right, w0 - half);
  hi = mat_vec(eig.right, w0 + half);
}

template <int Dim>
class MusclOperator {
 public:
  MusclOperator(const Grid<Dim>& grid, const ProblemSpec<Dim>& problem)
      : grid_(grid), bc_(problem.boundaries), gas_(problem.gas), work_(grid) {}

  void evaluate(const std::vector<double>& y, std::vector<double>& dydt) {
    work_.data = y;
    fill_ghosts<Dim>(work_, bc_, gas_);
    dydt.assign(y.size(), 0.0);
    const int nx = grid_.nx, ny = grid_.ny;
    // x-direction
    std::vector<Conserved<Dim>> lo(nx + 2), hi(nx + 2), f(nx + 1);
    for (int j = 0; j < ny; ++j) {
      for (int i = -1; i <= nx; ++i)
        muscl_faces<Dim>(work_.get(i - 1, j), work_.get(i, j), work_.get(i + 1, j), UnitNormal::x(),
                         gas_, lo[i + 1], hi[i + 1]);
      for (int k = 0; k <= nx; ++k) f[k] = godunov_flux<Dim>(hi[k], lo[k + 1], UnitNormal::x(), gas_);
      for (int i = 0; i < nx; ++i) {
        double* out = dydt.data() + work_.offset(i, j);
        for (std::size_t k = 0; k < kNumVars<Dim>; ++k) out[k] -= (f[i + 1][k] - f[i][k]) / grid_.dx();
      }
    }
    if constexpr (Dim == 2) {
      std::vector<Conserved<2>> ylo(ny + 2), yhi(ny + 2), g(ny + 1);
      for (int i = 0; i < nx; ++i) {
        for (int j = -1; j <= ny; ++j)
          muscl_faces<2>(work_.get(i, j - 1), work_.get(i, j), work_.get(i, j + 1), UnitNormal::y(),
                         gas_, ylo[j + 1], yhi[j + 1]);
        for (int k = 0; k <= ny; ++k) g[k] = godunov_flux<2>(yhi[k], ylo[k + 1], UnitNormal::y(), gas_);
        for (int j = 0; j < ny; ++j) {
          double* out = dydt.data() + work_.offset(i, j);
          for (std::size_t k = 0; k < kNumVars<2>; ++k) out[k] -= (g[j + 1][k] - g[j][k]) / grid_.dy();
        }
      }
    }
  }

 private:
  Grid<Dim> grid_;
  Boundaries<Dim> bc_;
  GasModel gas_;
  CellField<Dim> work_;
};

template <int Dim>
double muscl_dt(const CellField<Dim>& field, double cfl, const GasModel& gas) {
  const Grid<Dim>& g = field.grid;
  double dt = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Conserved<Dim> u = field.get(i, j);
      require_admissible<Dim>(u, gas);
      const Primitive<Dim> w = primitive_from_conserved<Dim>(u, gas);
      const double c = sound_speed(w, gas);
      dt = std::min(dt, g.dx() / (std::fabs(w.vel[0]) + c));
      if constexpr (Dim == 2) dt = std::min(dt, g.dy() / (std::fabs(w.vel[1]) + c));
    }
  return cfl * dt;
}

}  // namespace

template <int Dim>
RunResult<Dim> reference_solver(const ProblemSpec<Dim>& problem, int nx, int ny, double cfl,
                                std::optional<double> final_time) {
  const Grid<Dim> grid = make_grid<Dim>(problem.bounds, nx, ny, 2);
  RunResult<Dim> result{initialize_cell_averages<Dim>(problem.initial, grid, 3, problem.gas), {}};
  CellField<Dim>& field = result.field;
  MusclOperator<Dim> op(grid, problem);
  const double tf = final_time.value_or(problem.final_time);
  const auto start = std::chrono::steady_clock::now();
  double t = 0.0;
  int step = 0;
  std::vector<double> k1, k2, stage(field.data.size());
  try {
    while (t < tf) {
      double dt = muscl_dt<Dim>(field, cfl, problem.gas);
      bool last = false;
      if (t + dt >= tf * (1.0 - 1e-14)) {
        dt = tf - t;
        last = true;
      }
      op.evaluate(field.data, k1);
      for (std::size_t k = 0; k < stage.size(); ++k) stage[k] = field.data[k] + dt * k1[k];
      op.evaluate(stage, k2);
      for (std::size_t k = 0; k < stage.size(); ++k)
        field.data[k] = 0.5 * field.data[k] + 0.5 * (stage[k] + dt * k2[k]);
      t = last ? tf : t + dt;
      field.time = t;
      ++step;
    }
  } catch (const Error& e) {
    result.report.crash = CrashInfo{e.code(), e.what(), t, step + 1};
  }
  result.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.report.steps = step;
  result.report.final_time = t;
  return result;
}

std::vector<double> schlieren_field(const CellField<2>& field, double K) {
  const Grid<2>& g = field.grid;
  const int nx = g.nx, ny = g.ny;
  auto rho = [&](int i, int j) { return field.data[field.offset(i, j)]; };
  auto derivative = [](double lo, double hi, double h) { return (hi - lo) / h; };
  std::vector<double> mag(static_cast<std::size_t>(nx) * ny, 0.0);
  double max_mag = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      double gx = 0.0, gy = 0.0;
      if (nx > 1) {
        if (i == 0) gx = derivative(rho(0, j), rho(1, j), g.dx());
        else if (i == nx - 1) gx = derivative(rho(nx - 2, j), rho(nx - 1, j), g.dx());
        else gx = derivative(rho(i - 1, j), rho(i + 1, j), 2.0 * g.dx());
      }
      if (ny > 1) {
        if (j == 0) gy = derivative(rho(i, 0), rho(i, 1), g.dy());
        else if (j == ny - 1) gy = derivative(rho(i, ny - 2), rho(i, ny - 1), g.dy());
        else gy = derivative(rho(i, j - 1), rho(i, j + 1), 2.0 * g.dy());
      }
      const double m = std::hypot(gx, gy);
      mag[static_cast<std::size_t>(j) * nx + i] = m;
      max_mag = std::max(max_mag, m);
    }
  std::vector<double> out(mag.size(), 1.0);
  if (max_mag > 0.0)
    for (std::size_t k = 0; k < mag.size(); ++k) out[k] = std::exp(-K * mag[k] / max_mag);
  return out;
}

namespace {

// Index of the cell containing coordinate v, or the pair straddling it when
// v lies on a cell edge (first == second otherwise).
std::pair<int, int> locate(double v, double lo, double h, int n) {
  const double f = (v - lo) / h;
  const double nearest = std::round(f);
  if (std::fabs(f - nearest) < 1e-9 && nearest > 0 && nearest < n) {
    const int k = static_cast<int>(nearest);
    return {k - 1, k};
  }
  const int k = std::clamp(static_cast<int>(std::floor(f)), 0, n - 1);
  return {k, k};
}

}  // namespace

std::vector<SlicePoint> slice_extract(const CellField<2>& field, const SliceSpec& spec) {
  const Grid<2>& g = field.grid;
  std::vector<SlicePoint> out;
  auto mean = [&](int i0, int j0, int i1, int j1) {
    return 0.5 * (field.get(i0, j0) + field.get(i1, j1));
  };
  switch (spec.kind) {
    case SliceKind::XConst: {
      const auto [c0, c1] = locate(spec.value, g.x_min, g.dx(), g.nx);
      for (int j = 0; j < g.ny; ++j)
        out.push_back({g.y_center(j) - g.y_min, spec.value, g.y_center(j), mean(c0, j, c1, j)});
      break;
    }
    case SliceKind::YConst: {
      const auto [r0, r1] = locate(spec.value, g.y_min, g.dy(), g.ny);
      for (int i = 0; i < g.nx; ++i)
        out.push_back({g.x_center(i) - g.x_min, g.x_center(i), spec.value, mean(i, r0, i, r1)});
      break;
    }
    case SliceKind::Diagonal: {
      if (g.nx == g.ny) {
        for (int i = 0; i < g.nx; ++i) {
          const double x = g.x_center(i), y = g.y_center(i);
          out.push_back({std::hypot(x - g.x_min, y - g.y_min), x, y, field.get(i, i)});
        }
      } else {
        const int n = std::max(g.nx, g.ny);
        for (int k = 0; k < n; ++k) {
          const double t = (k + 0.5) / n;
          const double x = g.x_min + t * (g.x_max - g.x_min);
          const double y = g.y_min + t * (g.y_max - g.y_min);
          const int i = std::clamp(static_cast<int>(std::floor((x - g.x_min) / g.dx())), 0, g.nx - 1);
          const int j = std::clamp(static_cast<int>(std::floor((y - g.y_min) / g.dy())), 0, g.ny - 1);
          out.push_back({std::hypot(x - g.x_min, y - g.y_min), x, y, field.get(i, j)});
        }
      }
      break;
    }
  }
  return out;
}

double vortex_amplitude_loss(const CellField<2>& numerical, const CellField<2>& exact,
                             double rho_background) {
  auto amplitude = [rho_background](const std::vector<SlicePoint>& slice) {
    double a = 0.0;
    for (const SlicePoint& p : slice) a = std::max(a, std::fabs(p.u[0] - rho_background));
    return a;
  };
  const double num = amplitude(slice_extract(numerical, {SliceKind::Diagonal, 0.0}));
  const double ex = amplitude(slice_extract(exact, {SliceKind::Diagonal, 0.0}));
  return 1.0 - num / ex;
}

#define FVDEC_INSTANTIATE_BENCHMARKS(D)                                                       \
  template CellField<D> exact_cell_averages<D>(const ProblemSpec<D>&, const Grid<D>&, int,    \
                                               double);                                       \
  template ErrorReport error_norms<D>(const CellField<D>&, const CellField<D>&);              \
  template std::vector<ConvergenceRow> convergence_study<D>(                                  \
      const ProblemSpec<D>&, const RunConfig&, const std::vector<int>&);                      \
  template RunResult<D> reference_solver<D>(const ProblemSpec<D>&, int, int, double,          \
                                            std::optional<double>);

FVDEC_INSTANTIATE_BENCHMARKS(1)
FVDEC_INSTANTIATE_BENCHMARKS(2)

#undef FVDEC_INSTANTIATE_BENCHMARKS

}  // namespace fvdec
