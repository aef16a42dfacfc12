#pragma once

// Structured-grid finite-volume solver: grids and cell fields with ghost
// layers, boundary conditions, the WENO semidiscrete operator, CFL time-step
// selection and the DeC-driven time loop.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fvdec/dec.hpp"
#include "fvdec/euler.hpp"
#include "fvdec/fluxes.hpp"
#include "fvdec/quadrature.hpp"
#include "fvdec/weno.hpp"

namespace fvdec {

template <int Dim>
using Point = std::array<double, Dim>;

/// Uniform Cartesian grid.  In 1D ny == 1 and there are no y ghost layers.
template <int Dim>
struct Grid {
  int nx = 1;
  int ny = 1;
  int ghost = 0;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return Dim == 2 ? (y_max - y_min) / ny : 1.0; }
  double cell_volume() const { return dx() * dy(); }
  int ghost_x() const { return ghost; }
  int ghost_y() const { return Dim == 2 ? ghost : 0; }
  int padded_nx() const { return nx + 2 * ghost_x(); }
  int padded_ny() const { return ny + 2 * ghost_y(); }
  double x_center(int i) const { return x_min + (i + 0.5) * dx(); }
  double y_center(int j) const { return Dim == 2 ? y_min + (j + 0.5) * dy() : 0.0; }
};

template <int Dim>
Grid<Dim> make_grid(const std::array<double, 2 * Dim>& bounds, int nx, int ny, int ghost);

/// Cell averages of the conserved variables, ghost layers included, stored
/// as a flat array (kNumVars<Dim> values per cell, x fastest).
template <int Dim>
struct CellField {
  Grid<Dim> grid;
  std::vector<double> data;
  double time = 0.0;

  static constexpr std::size_t nv = kNumVars<Dim>;

  explicit CellField(const Grid<Dim>& g = Grid<Dim>{})
      : grid(g), data(static_cast<std::size_t>(g.padded_nx()) * g.padded_ny() * nv, 0.0) {}

  std::size_t offset(int i, int j = 0) const {
    return (static_cast<std::size_t>(j + grid.ghost_y()) * grid.padded_nx() +
            static_cast<std::size_t>(i + grid.ghost_x())) * nv;
  }
  Conserved<Dim> get(int i, int j = 0) const {
    Conserved<Dim> u;
    const double* p = data.data() + offset(i, j);
    for (std::size_t k = 0; k < nv; ++k) u[k] = p[k];
    return u;
  }
  void set(int i, int j, const Conserved<Dim>& u) {
    double* p = data.data() + offset(i, j);
    for (std::size_t k = 0; k < nv; ++k) p[k] = u[k];
  }
};

enum class BoundaryKind { Periodic, Transmissive, Inflow };

template <int Dim>
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::Transmissive;
  Primitive<Dim> inflow{};

  static BoundaryCondition periodic() { return {BoundaryKind::Periodic, {}}; }
  static BoundaryCondition transmissive() { return {BoundaryKind::Transmissive, {}}; }
  static BoundaryCondition fixed_inflow(const Primitive<Dim>& w) { return {BoundaryKind::Inflow, w}; }
};

/// Sides ordered x-min, x-max[, y-min, y-max].
template <int Dim>
using Boundaries = std::array<BoundaryCondition<Dim>, 2 * Dim>;

/// Throws InvalidArgument if a periodic side is paired with a non-periodic one.
template <int Dim>
void validate_boundaries(const Boundaries<Dim>& bc);

/// Fills every ghost cell from the interior.  In 2D the x-sides are filled
/// first, then the y-sides over the full padded width, which fills corners.
template <int Dim>
void fill_ghosts(CellField<Dim>& field, const Boundaries<Dim>& bc, const GasModel& gas);

template <int Dim>
using InitialCondition = std::function<Primitive<Dim>(const Point<Dim>&)>;

template <int Dim>
using ExactSolution = std::function<Primitive<Dim>(const Point<Dim>&, double t)>;

template <int Dim>
struct ProblemSpec {
  std::string id;
  std::array<double, 2 * Dim> bounds{};  // x_min, x_max[, y_min, y_max]
  InitialCondition<Dim> initial;
  Boundaries<Dim> boundaries{};
  double final_time = 0.0;
  GasModel gas{};
  ExactSolution<Dim> exact;  // empty when no exact solution is known
};

struct RunConfig {
  int order = 3;
  FluxChoice flux = ForceAlpha{2.0};
  double sigma = 0.9;
  std::optional<double> final_time;  // overrides the problem's
  int nx = 100;
  int ny = 1;
  bool deterministic = true;  // the loops are serial, so runs are always reproducible
  std::optional<double> fixed_dt;
  std::optional<int> max_steps;
  double weno_epsilon = kWenoEpsilon;
};

/// Gauss-Legendre points per cell direction and per 2D face: 2, 4, 4 for
/// orders 3, 5, 7.
int quadrature_points(int order);

/// Ghost layers needed by the scheme of the given order.
int ghost_width(int order);

/// Cell averages of the initial condition by tensor-product Gauss-Legendre
/// quadrature with quadrature_points(order) points per direction.
template <int Dim>
CellField<Dim> initialize_cell_averages(const InitialCondition<Dim>& initial,
                                        const Grid<Dim>& grid, int order, const GasModel& gas);

/// Maximum stable CFL number.  Throws Unstable2DConfiguration for FORCE-1 in 2D.
double cfl_limit(const FluxChoice& flux, int dim);

/// C * min(dx / max s_x, dy / max s_y) from interior cell averages, with
/// C = sigma * cfl_limit.  Throws UnphysicalState on an inadmissible average.
template <int Dim>
double compute_dt(const CellField<Dim>& field, const FluxChoice& flux, double sigma,
                  const GasModel& gas);

/// The WENO finite-volume right-hand side.  Each face flux is computed once
/// and shared by its two cells; ghost entries of the result are zero.
template <int Dim>
class SemidiscreteOperator {
 public:
  SemidiscreteOperator(const Grid<Dim>& grid, const Boundaries<Dim>& bc, int order,
                       const FluxChoice& flux, const GasModel& gas,
                       double weno_epsilon = kWenoEpsilon);

  /// Fixes dx/dt and dy/dt in the flux context for the current step.
  void set_time_step(double dt) { dt_ = dt; }

  /// y and dydt are laid out like CellField::data.  Flux-layer errors are
  /// rethrown with the face position appended.
  void evaluate(std::span<const double> y, std::span<double> dydt);

  const ReconstructionPlan& face_plan() const { return face_plan_; }
  const ReconstructionPlan& quad_plan() const { return quad_plan_; }
  const QuadratureRule& face_rule() const { return face_rule_; }

 private:
  void evaluate_1d(std::span<double> dydt);
  void evaluate_2d(std::span<double> dydt);

  Grid<Dim> grid_;
  Boundaries<Dim> bc_;
  int order_;
  FluxChoice flux_;
  GasModel gas_;
  double dt_ = 1.0;
  ReconstructionPlan face_plan_;
  ReconstructionPlan quad_plan_;
  QuadratureRule face_rule_;
  CellField<Dim> work_;
  std::vector<Conserved<Dim>> low_x_, high_x_, low_y_, high_y_;
  std::vector<Conserved<Dim>> flux_x_, flux_y_;
};

struct CrashInfo {
  ErrorCode code = ErrorCode::SimulationCrash;
  std::string cause;
  double time = 0.0;
  int step = 0;
};

struct RunReport {
  int steps = 0;
  double wall_seconds = 0.0;
  double final_time = 0.0;
  std::optional<CrashInfo> crash;
};

template <int Dim>
struct RunResult {
  CellField<Dim> field;
  RunReport report;
};

/// Runs the problem to its final time.  A crash is reported in the result,
/// not thrown; the returned field is the last completed step.  Configuration
/// errors (bad order, FORCE-1 in 2D, ...) throw.
template <int Dim>
RunResult<Dim> run(const ProblemSpec<Dim>& problem, const RunConfig& config);

/// As run(), starting from a given field (whose ghost width must match).
template <int Dim>
RunResult<Dim> run_from(const CellField<Dim>& initial, const ProblemSpec<Dim>& problem,
                        const RunConfig& config);

/// Throws if the configuration cannot be run in this dimension.
void validate_config(const RunConfig& config, int dim);

}  // namespace fvdec
