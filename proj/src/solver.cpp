#include "fvdec/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace fvdec {

namespace {

std::string format_position(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

[[noreturn]] void rethrow_at(const Error& e, const std::string& where) {
  throw Error(e.code(), std::string(e.what()) + " at " + where);
}

}  // namespace

template <int Dim>
Grid<Dim> make_grid(const std::array<double, 2 * Dim>& bounds, int nx, int ny, int ghost) {
  if (nx < 1 || (Dim == 2 && ny < 1))
    throw Error(ErrorCode::InvalidArgument, "cell counts must be positive");
  Grid<Dim> g;
  g.nx = nx;
  g.ny = Dim == 2 ? ny : 1;
  g.ghost = ghost;
  g.x_min = bounds[0];
  g.x_max = bounds[1];
  if constexpr (Dim == 2) {
    g.y_min = bounds[2];
    g.y_max = bounds[3];
  }
  return g;
}

template <int Dim>
void validate_boundaries(const Boundaries<Dim>& bc) {
  for (int d = 0; d < Dim; ++d) {
    const bool lo = bc[2 * d].kind == BoundaryKind::Periodic;
    const bool hi = bc[2 * d + 1].kind == BoundaryKind::Periodic;
    if (lo != hi)
      throw Error(ErrorCode::InvalidArgument, "periodic boundaries must be paired on opposite sides");
  }
}

template <int Dim>
void fill_ghosts(CellField<Dim>& field, const Boundaries<Dim>& bc, const GasModel& gas) {
  const Grid<Dim>& g = field.grid;
  const int gx = g.ghost_x();
  const int nx = g.nx;
  const Conserved<Dim> in_xlo = conserved_from_primitive<Dim>(bc[0].inflow, gas);
  const Conserved<Dim> in_xhi = conserved_from_primitive<Dim>(bc[1].inflow, gas);
  for (int j = 0; j < g.ny; ++j) {
    for (int k = 1; k <= gx; ++k) {
      switch (bc[0].kind) {
        case BoundaryKind::Periodic: field.set(-k, j, field.get(nx - k, j)); break;
        case BoundaryKind::Transmissive: field.set(-k, j, field.get(0, j)); break;
        case BoundaryKind::Inflow: field.set(-k, j, in_xlo); break;
      }
      switch (bc[1].kind) {
        case BoundaryKind::Periodic: field.set(nx - 1 + k, j, field.get(k - 1, j)); break;
        case BoundaryKind::Transmissive: field.set(nx - 1 + k, j, field.get(nx - 1, j)); break;
        case BoundaryKind::Inflow: field.set(nx - 1 + k, j, in_xhi); break;
      }
    }
  }
  if constexpr (Dim == 2) {
    const int gy = g.ghost_y();
    const int ny = g.ny;
    const Conserved<2> in_ylo = conserved_from_primitive<2>(bc[2].inflow, gas);
    const Conserved<2> in_yhi = conserved_from_primitive<2>(bc[3].inflow, gas);
    for (int i = -gx; i < nx + gx; ++i) {
      for (int k = 1; k <= gy; ++k) {
        switch (bc[2].kind) {
          case BoundaryKind::Periodic: field.set(i, -k, field.get(i, ny - k)); break;
          case BoundaryKind::Transmissive: field.set(i, -k, field.get(i, 0)); break;
          case BoundaryKind::Inflow: field.set(i, -k, in_ylo); break;
        }
        switch (bc[3].kind) {
          case BoundaryKind::Periodic: field.set(i, ny - 1 + k, field.get(i, k - 1)); break;
          case BoundaryKind::Transmissive: field.set(i, ny - 1 + k, field.get(i, ny - 1)); break;
          case BoundaryKind::Inflow: field.set(i, ny - 1 + k, in_yhi); break;
        }
      }
    }
  }
}

int quadrature_points(int order) {
  switch (order) {
    case 3: return 2;
    case 5: return 4;
    case 7: return 4;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "order must be 3, 5 or 7 (got " + std::to_string(order) + ")");
  }
}

// Reconstruction is needed in the first ghost cell on each side, whose
// stencil reaches r cells beyond the boundary.
int ghost_width(int order) {
  quadrature_points(order);
  return (order + 1) / 2;
}

template <int Dim>
CellField<Dim> initialize_cell_averages(const InitialCondition<Dim>& initial,
                                        const Grid<Dim>& grid, int order, const GasModel& gas) {
  const QuadratureRule rule = gauss_legendre(quadrature_points(order));
  const std::size_t nq = rule.nodes.size();
  CellField<Dim> field(grid);
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      Conserved<Dim> avg{};
      if constexpr (Dim == 1) {
        for (std::size_t q = 0; q < nq; ++q) {
          const Point<1> x{grid.x_center(i) + rule.nodes[q] * grid.dx()};
          avg = avg + rule.weights[q] * conserved_from_primitive<1>(initial(x), gas);
        }
      } else {
        for (std::size_t qy = 0; qy < nq; ++qy)
          for (std::size_t qx = 0; qx < nq; ++qx) {
            const Point<2> x{grid.x_center(i) + rule.nodes[qx] * grid.dx(),
                             grid.y_center(j) + rule.nodes[qy] * grid.dy()};
            avg = avg + (rule.weights[qx] * rule.weights[qy]) *
                            conserved_from_primitive<2>(initial(x), gas);
          }
      }
      field.set(i, j, avg);
    }
  return field;
}

namespace {

// Stability limits of FORCE-alpha in 2D for alpha = 2, 3, ..., 10.
constexpr std::array<double, 9> kForce2DLimits = {0.498, 0.470, 0.433, 0.399, 0.371,
                                                  0.348, 0.328, 0.314, 0.299};

}  // namespace

double cfl_limit(const FluxChoice& flux, int dim) {
  if (const auto* f = std::get_if<ForceAlpha>(&flux)) {
    const double alpha = f->alpha;
    if (dim == 1) return std::sqrt(2.0 * alpha - 1.0) / alpha;
    if (alpha < 2.0)
      throw Error(ErrorCode::Unstable2DConfiguration,
                  "FORCE-alpha with alpha < 2 has no stable CFL number in 2D");
    const double a = std::min(alpha, 10.0);
    const int lo = std::min(static_cast<int>(std::floor(a)), 9);
    const double t = a - lo;
    return (1.0 - t) * kForce2DLimits[lo - 2] + t * kForce2DLimits[std::min(lo - 1, 8)];
  }
  return dim == 1 ? 1.0 : 0.5;
}

template <int Dim>
double compute_dt(const CellField<Dim>& field, const FluxChoice& flux, double sigma,
                  const GasModel& gas) {
  const Grid<Dim>& g = field.grid;
  double sx = 0.0, sy = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Conserved<Dim> u = field.get(i, j);
      try {
        require_admissible<Dim>(u, gas);
      } catch (const Error& e) {
        std::string where = "cell average x=" + format_position(g.x_center(i));
        if constexpr (Dim == 2) where += ", y=" + format_position(g.y_center(j));
        rethrow_at(e, where + " (time step computation)");
      }
      const Primitive<Dim> w = primitive_from_conserved<Dim>(u, gas);
      const double c = sound_speed(w, gas);
      sx = std::max(sx, std::fabs(w.vel[0]) + c);
      if constexpr (Dim == 2) sy = std::max(sy, std::fabs(w.vel[1]) + c);
    }
  const double C = sigma * cfl_limit(flux, Dim);
  double dt = g.dx() / sx;
  if constexpr (Dim == 2) dt = std::min(dt, g.dy() / sy);
  return C * dt;
}

template <int Dim>
SemidiscreteOperator<Dim>::SemidiscreteOperator(const Grid<Dim>& grid, const Boundaries<Dim>& bc,
                                                 int order, const FluxChoice& flux,
                                                 const GasModel& gas, double weno_epsilon)
    : grid_(grid), bc_(bc), order_(order), flux_(flux), gas_(gas), work_(grid) {
  validate_boundaries<Dim>(bc);
  if (grid.ghost < ghost_width(order))
    throw Error(ErrorCode::GridMismatch, "grid has too few ghost layers for this order");
  const std::array<double, 2> faces{-0.5, 0.5};
  face_plan_ = ReconstructionPlan::build(order, faces, weno_epsilon);
  face_rule_ = gauss_legendre(quadrature_points(order));
  quad_plan_ = ReconstructionPlan::build(order, face_rule_.nodes, weno_epsilon);
  const std::size_t nx = grid.nx, ny = grid.ny;
  if constexpr (Dim == 1) {
    low_x_.resize(nx + 2);
    high_x_.resize(nx + 2);
    flux_x_.resize(nx + 1);
  } else {
    const std::size_t nq = face_rule_.nodes.size();
    low_x_.resize((nx + 2) * ny * nq);
    high_x_.resize((nx + 2) * ny * nq);
    low_y_.resize(nx * (ny + 2) * nq);
    high_y_.resize(nx * (ny + 2) * nq);
    flux_x_.resize((nx + 1) * ny);
    flux_y_.resize(nx * (ny + 1));
  }
}

template <int Dim>
void SemidiscreteOperator<Dim>::evaluate(std::span<const double> y, std::span<double> dydt) {
  if (y.size() != work_.data.size() || dydt.size() != work_.data.size())
    throw Error(ErrorCode::GridMismatch, "state size does not match the grid");
  std::copy(y.begin(), y.end(), work_.data.begin());
  fill_ghosts<Dim>(work_, bc_, gas_);
  std::fill(dydt.begin(), dydt.end(), 0.0);
  if constexpr (Dim == 1) evaluate_1d(dydt);
  else evaluate_2d(dydt);
}

template <int Dim>
void SemidiscreteOperator<Dim>::evaluate_1d(std::span<double> dydt) {
  if constexpr (Dim == 1) {
    const int nx = grid_.nx;
    const int r = face_plan_.r();
    const int s = face_plan_.stencil_size();
    std::array<Conserved<1>, kMaxStencil> window{};
    std::array<Conserved<1>, 2> out{};
    for (int i = -1; i <= nx; ++i) {
      for (int a = 0; a < s; ++a) window[a] = work_.get(i - (r - 1) + a);
      try {
        const EigenDecomposition<1> eig =
            eigen_decomposition<1>(window[r - 1], UnitNormal::x(), gas_);
        reconstruct_characteristic_1d(std::span<const Conserved<1>>(window.data(), s), eig,
                                      face_plan_, out);
      } catch (const Error& e) {
        rethrow_at(e, "cell x=" + format_position(grid_.x_center(i)) + " (reconstruction)");
      }
      low_x_[i + 1] = out[0];
      high_x_[i + 1] = out[1];
    }
    FluxContext ctx{grid_.dx() / dt_, gas_, UnitNormal::x()};
    for (int f = 0; f <= nx; ++f) {
      // face between cells f-1 and f
      try {
        flux_x_[f] = numerical_flux<1>(flux_, high_x_[f], low_x_[f + 1], ctx);
      } catch (const Error& e) {
        rethrow_at(e, "face x=" + format_position(grid_.x_min + f * grid_.dx()));
      }
    }
    const double inv_dx = 1.0 / grid_.dx();
    for (int i = 0; i < nx; ++i) {
      double* out_i = dydt.data() + work_.offset(i);
      for (std::size_t k = 0; k < kNumVars<1>; ++k)
        out_i[k] = -(flux_x_[i + 1][k] - flux_x_[i][k]) * inv_dx;
    }
  } else {
    (void)dydt;
  }
}

template <int Dim>
void SemidiscreteOperator<Dim>::evaluate_2d(std::span<double> dydt) {
  if constexpr (Dim == 2) {
    const int nx = grid_.nx, ny = grid_.ny;
    const int r = face_plan_.r();
    const int s = face_plan_.stencil_size();
    const std::size_t nq = face_rule_.nodes.size();
    std::array<Conserved<2>, kMaxStencil * kMaxStencil> block{};
    std::array<Conserved<2>, 4> lo{}, hi{};

    auto reconstruct_cell = [&](int i, int j, int axis) {
      for (int b = 0; b < s; ++b)
        for (int a = 0; a < s; ++a) block[b * s + a] = work_.get(i - (r - 1) + a, j - (r - 1) + b);
      const Conserved<2>& centre = block[(r - 1) * s + (r - 1)];
      try {
        const EigenDecomposition<2> ex = eigen_decomposition<2>(centre, UnitNormal::x(), gas_);
        const EigenDecomposition<2> ey = eigen_decomposition<2>(centre, UnitNormal::y(), gas_);
        reconstruct_characteristic_2d(std::span<const Conserved<2>>(block.data(), s * s), axis,
                                      ex, ey, face_plan_, quad_plan_,
                                      std::span<Conserved<2>>(lo.data(), nq),
                                      std::span<Conserved<2>>(hi.data(), nq));
      } catch (const Error& e) {
        rethrow_at(e, "cell x=" + format_position(grid_.x_center(i)) +
                          ", y=" + format_position(grid_.y_center(j)) + " (reconstruction)");
      }
    };

    // x-faces: cells i = -1..nx on interior rows.
    for (int j = 0; j < ny; ++j)
      for (int i = -1; i <= nx; ++i) {
        reconstruct_cell(i, j, 0);
        const std::size_t base = (static_cast<std::size_t>(j) * (nx + 2) + (i + 1)) * nq;
        for (std::size_t q = 0; q < nq; ++q) {
          low_x_[base + q] = lo[q];
          high_x_[base + q] = hi[q];
        }
      }
    // y-faces: cells j = -1..ny on interior columns.
    for (int j = -1; j <= ny; ++j)
      for (int i = 0; i < nx; ++i) {
        reconstruct_cell(i, j, 1);
        const std::size_t base = (static_cast<std::size_t>(j + 1) * nx + i) * nq;
        for (std::size_t q = 0; q < nq; ++q) {
          low_y_[base + q] = lo[q];
          high_y_[base + q] = hi[q];
        }
      }

    const FluxContext cx{grid_.dx() / dt_, gas_, UnitNormal::x()};
    const FluxContext cy{grid_.dy() / dt_, gas_, UnitNormal::y()};
    for (int j = 0; j < ny; ++j)
      for (int f = 0; f <= nx; ++f) {
        const std::size_t left = (static_cast<std::size_t>(j) * (nx + 2) + f) * nq;
        const std::size_t right = left + nq;
        Conserved<2> acc{};
        for (std::size_t q = 0; q < nq; ++q) {
          try {
            acc = acc + face_rule_.weights[q] *
                            numerical_flux<2>(flux_, high_x_[left + q], low_x_[right + q], cx);
          } catch (const Error& e) {
            rethrow_at(e, "face x=" + format_position(grid_.x_min + f * grid_.dx()) +
                              ", y=" + format_position(grid_.y_center(j)));
          }
        }
        flux_x_[static_cast<std::size_t>(j) * (nx + 1) + f] = acc;
      }
    for (int f = 0; f <= ny; ++f)
      for (int i = 0; i < nx; ++i) {
        const std::size_t below = (static_cast<std::size_t>(f) * nx + i) * nq;
        const std::size_t above = below + static_cast<std::size_t>(nx) * nq;
        Conserved<2> acc{};
        for (std::size_t q = 0; q < nq; ++q) {
          try {
            acc = acc + face_rule_.weights[q] *
                            numerical_flux<2>(flux_, high_y_[below + q], low_y_[above + q], cy);
          } catch (const Error& e) {
            rethrow_at(e, "face x=" + format_position(grid_.x_center(i)) +
                              ", y=" + format_position(grid_.y_min + f * grid_.dy()));
          }
        }
        flux_y_[static_cast<std::size_t>(f) * nx + i] = acc;
      }

    const double inv_dx = 1.0 / grid_.dx(), inv_dy = 1.0 / grid_.dy();
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const Conserved<2>& fw = flux_x_[static_cast<std::size_t>(j) * (nx + 1) + i];
        const Conserved<2>& fe = flux_x_[static_cast<std::size_t>(j) * (nx + 1) + i + 1];
        const Conserved<2>& fs = flux_y_[static_cast<std::size_t>(j) * nx + i];
        const Conserved<2>& fn = flux_y_[static_cast<std::size_t>(j + 1) * nx + i];
        double* out = dydt.data() + work_.offset(i, j);
        for (std::size_t k = 0; k < kNumVars<2>; ++k)
          out[k] = -(fe[k] - fw[k]) * inv_dx - (fn[k] - fs[k]) * inv_dy;
      }
  } else {
    (void)dydt;
  }
}

void validate_config(const RunConfig& config, int dim) {
  quadrature_points(config.order);
  if (!(config.sigma > 0.0 && config.sigma <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "sigma must lie in (0, 1]");
  if (config.final_time && !(*config.final_time >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "final time must be non-negative");
  if (config.nx < 1 || (dim == 2 && config.ny < 1))
    throw Error(ErrorCode::InvalidArgument, "cell counts must be positive");
  cfl_limit(config.flux, dim);
}

template <int Dim>
RunResult<Dim> run(const ProblemSpec<Dim>& problem, const RunConfig& config) {
  validate_config(config, Dim);
  const Grid<Dim> grid = make_grid<Dim>(problem.bounds, config.nx, config.ny, ghost_width(config.order));
  const CellField<Dim> initial =
      initialize_cell_averages<Dim>(problem.initial, grid, config.order, problem.gas);
  return run_from<Dim>(initial, problem, config);
}

template <int Dim>
RunResult<Dim> run_from(const CellField<Dim>& initial, const ProblemSpec<Dim>& problem,
                        const RunConfig& config) {
  validate_config(config, Dim);
  RunResult<Dim> result{initial, {}};
  CellField<Dim>& field = result.field;
  const double tf = config.final_time.value_or(problem.final_time);
  SemidiscreteOperator<Dim> op(field.grid, problem.boundaries, config.order, config.flux,
                               problem.gas, config.weno_epsilon);
  const DecCoefficients coeffs = build_coefficients(config.order);
  OdeSystem system{[&op](double, std::span<const double> y, std::span<double> dydt) {
                     op.evaluate(y, dydt);
                   },
                   true};

  const auto start = std::chrono::steady_clock::now();
  double t = field.time;
  int step = 0;
  try {
    while (t < tf && (!config.max_steps || step < *config.max_steps)) {
      double dt = config.fixed_dt ? *config.fixed_dt
                                  : compute_dt<Dim>(field, config.flux, config.sigma, problem.gas);
      bool last = false;
      if (t + dt >= tf * (1.0 - 1e-14)) {
        dt = tf - t;
        last = true;
      }
      op.set_time_step(dt);
      std::vector<double> next = dec_step(system, t, field.data, dt, coeffs);
      field.data = std::move(next);
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

#define FVDEC_INSTANTIATE_SOLVER(D)                                                          \
  template Grid<D> make_grid<D>(const std::array<double, 2 * D>&, int, int, int);          \
  template void validate_boundaries<D>(const Boundaries<D>&);                                \
  template void fill_ghosts<D>(CellField<D>&, const Boundaries<D>&, const GasModel&);       \
  template CellField<D> initialize_cell_averages<D>(const InitialCondition<D>&,              \
                                                    const Grid<D>&, int, const GasModel&);   \
  template double compute_dt<D>(const CellField<D>&, const FluxChoice&, double,              \
                                const GasModel&);                                            \
  template class SemidiscreteOperator<D>;                                                    \
  template RunResult<D> run<D>(const ProblemSpec<D>&, const RunConfig&);                     \
  template RunResult<D> run_from<D>(const CellField<D>&, const ProblemSpec<D>&,              \
                                    const RunConfig&);

FVDEC_INSTANTIATE_SOLVER(1)
FVDEC_INSTANTIATE_SOLVER(2)

#undef FVDEC_INSTANTIATE_SOLVER

}  // namespace fvdec
