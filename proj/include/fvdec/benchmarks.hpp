#pragma once

// Test-problem registry, exact solutions, error norms, convergence studies,
// the second-order reference scheme and post-processing (Schlieren, slices).

#include <optional>
#include <string>
#include <vector>

#include "fvdec/solver.hpp"

namespace fvdec {

/// Identifiers: advection, rp1..rp5, shock-turbulence (1D); vortex,
/// vortex-long, explosion, shock-vortex, shock-vortex-base (2D).
std::vector<std::string> problem_ids();

/// 1 or 2.  Throws InvalidArgument for unknown identifiers.
int problem_dimension(const std::string& id);

ProblemSpec<1> problem_1d(const std::string& id, const GasModel& gas = {});
ProblemSpec<2> problem_2d(const std::string& id, const GasModel& gas = {});

struct RiemannData {
  Primitive<1> left;
  Primitive<1> right;
  double x_d;
  double final_time;
};

/// Initial data of Riemann problems 1..5 on [0, 1].
RiemannData riemann_problem(int k);

struct ShockVortexParams {
  double gamma = 1.4;
  double mach_shock = 1.5;
  double mach_vortex = 0.9;
  double a = 0.075;
  double b = 0.175;
  double xc = 0.25;
  double yc = 0.5;
  double gas_constant = 287.0;
};

/// Upstream (III) and downstream (IV) states of the stationary shock at x = 0.5.
Primitive<2> shock_vortex_upstream(const ShockVortexParams& params);
Primitive<2> shock_vortex_downstream(const ShockVortexParams& params);

/// Vortex temperature profile T(r), continuous at r = a and r = b.
double shock_vortex_temperature(double r, const ShockVortexParams& params);

/// Azimuthal velocity of the shock-vortex vortex.
double shock_vortex_swirl(double r, const ShockVortexParams& params);

/// Cell averages of the exact solution at time t, by the same quadrature as
/// initialize_cell_averages.  Throws InvalidArgument if there is none.
template <int Dim>
CellField<Dim> exact_cell_averages(const ProblemSpec<Dim>& problem, const Grid<Dim>& grid,
                                   int order, double t);

/// Density error norms: L1 = sum |e| vol, L2 = sqrt(sum e^2 vol), Linf = max |e|.
struct ErrorReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Throws GridMismatch if the grids differ.
template <int Dim>
ErrorReport error_norms(const CellField<Dim>& numerical, const CellField<Dim>& exact);

/// log2(coarse / fine) for a mesh doubling; general ratios use log(N_f/N_c).
double observed_order(double coarse_error, double fine_error, int coarse_n, int fine_n);

struct ConvergenceRow {
  int n = 0;
  std::optional<std::string> crash;  // set instead of errors when the run failed
  ErrorReport errors;
  std::optional<double> order_l1, order_l2, order_linf;
  double cpu_seconds = 0.0;
  int steps = 0;
};

/// Runs the mesh sequence (N cells in 1D, N x N cells in 2D) and fills in the
/// observed orders between consecutive completed rows.
template <int Dim>
std::vector<ConvergenceRow> convergence_study(const ProblemSpec<Dim>& problem,
                                              const RunConfig& config,
                                              const std::vector<int>& meshes);

/// Second-order MUSCL scheme: minmod-limited characteristic slopes, exact
/// Riemann solver flux, SSPRK2 time stepping with the given CFL number.
template <int Dim>
RunResult<Dim> reference_solver(const ProblemSpec<Dim>& problem, int nx, int ny, double cfl,
                                std::optional<double> final_time = std::nullopt);

/// exp(-K |grad rho| / max |grad rho|) on interior cells, x fastest.  Central
/// differences inside, one-sided at the boundary; all ones for uniform rho.
std::vector<double> schlieren_field(const CellField<2>& field, double K = 80.0);

enum class SliceKind { XConst, YConst, Diagonal };

struct SliceSpec {
  SliceKind kind = SliceKind::Diagonal;
  double value = 0.0;  // the constant for XConst / YConst
};

struct SlicePoint {
  double s = 0.0;  // arc length from the start of the line
  double x = 0.0;
  double y = 0.0;
  Conserved<2> u{};
};

/// Samples along a line.  A line on a cell edge averages the two adjacent
/// rows or columns.  The diagonal joins the lower-left and upper-right
/// corners; square grids use cells (i, i), other grids the nearest cell at
/// max(nx, ny) evenly spaced points.
std::vector<SlicePoint> slice_extract(const CellField<2>& field, const SliceSpec& spec);

/// Amplitude loss of a travelling vortex on the diagonal slice:
/// 1 - max |rho - rho_inf| (numerical) / max |rho - rho_inf| (exact).
double vortex_amplitude_loss(const CellField<2>& numerical, const CellField<2>& exact,
                             double rho_background = 1.0);

}  // namespace fvdec
