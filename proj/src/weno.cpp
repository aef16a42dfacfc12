#include "fvdec/weno.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fvdec {

namespace {

using LMatrix = std::vector<std::vector<long double>>;

// Solves m x = rhs by Gaussian elimination with partial pivoting.
std::vector<long double> solve(LMatrix m, std::vector<long double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t c = n; c-- > 0;) {
    long double s = rhs[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= m[c][k] * x[k];
    x[c] = s / m[c][c];
  }
  return x;
}

LMatrix invert(const LMatrix& m) {
  const std::size_t n = m.size();
  LMatrix inv(n, std::vector<long double>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<long double> e(n, 0.0L);
    e[col] = 1.0L;
    const auto x = solve(m, e);
    for (std::size_t row = 0; row < n; ++row) inv[row][col] = x[row];
  }
  return inv;
}

long double ipow(long double x, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Average of x^k over the unit cell centred at integer offset j.
long double cell_moment(int j, int k) {
  return (ipow(j + 0.5L, k + 1) - ipow(j - 0.5L, k + 1)) / (k + 1);
}

// A[a][k]: average of x^k over cell `first + a`, for a polynomial of degree n-1.
LMatrix moment_matrix(int first, int n) {
  LMatrix a(n, std::vector<long double>(n));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k < n; ++k) a[row][k] = cell_moment(first + row, k);
  return a;
}

// Coefficients c with p(eta) = sum_a c_a * avg_a for the degree n-1
// polynomial matching the n averages starting at offset `first`.
std::vector<long double> point_coefficients(int first, int n, long double eta) {
  const LMatrix a = moment_matrix(first, n);
  LMatrix at(n, std::vector<long double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = a[j][i];
  std::vector<long double> powers(n);
  for (int k = 0; k < n; ++k) powers[k] = ipow(eta, k);
  return solve(at, powers);
}

long double falling(int m, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) r *= (m - i);
  return r;
}

// Jiang-Shu: sum_{k=1}^{r-1} int_{-1/2}^{1/2} (p^{(k)})^2 in reference coordinates.
SmallMat smoothness_form_for(int first, int r) {
  LMatrix q(r, std::vector<long double>(r, 0.0L));
  for (int m = 0; m < r; ++m)
    for (int n = 0; n < r; ++n)
      for (int k = 1; k < r; ++k) {
        if (m < k || n < k) continue;
        const int pw = (m - k) + (n - k);
        const long double integral = (ipow(0.5L, pw + 1) - ipow(-0.5L, pw + 1)) / (pw + 1);
        q[m][n] += falling(m, k) * falling(n, k) * integral;
      }
  const LMatrix ainv = invert(moment_matrix(first, r));
  SmallMat form{};
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      long double s = 0.0L;
      for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n) s += ainv[m][a] * q[m][n] * ainv[n][b];
      form[a][b] = static_cast<double>(s);
    }
  return form;
}

}  // namespace

ReconstructionPlan ReconstructionPlan::build(int order, std::span<const double> points,
                                              double epsilon) {
  if (order != 3 && order != 5 && order != 7)
    throw Error(ErrorCode::InvalidArgument,
                "WENO order must be 3, 5 or 7 (got " + std::to_string(order) + ")");
  ReconstructionPlan plan;
  const int r = (order + 1) / 2;
  const int s = 2 * r - 1;
  plan.r_ = r;
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "WENO epsilon must be positive");
  plan.epsilon_ = epsilon;
  for (double eta : points) {
    if (!(eta >= -0.5 && eta <= 0.5))
      throw Error(ErrorCode::InvalidArgument, "evaluation point outside [-1/2, 1/2]");
    plan.points_.push_back(eta);

    const auto high = point_coefficients(-(r - 1), s, eta);
    std::array<double, kMaxStencil> high_row{};
    for (int a = 0; a < s; ++a) high_row[a] = static_cast<double>(high[a]);

    std::vector<std::vector<long double>> low(r);
    SmallMat rows{};
    for (int l = 0; l < r; ++l) {
      low[l] = point_coefficients(-(r - 1) + l, r, eta);
      for (int k = 0; k < r; ++k) rows[l][k] = static_cast<double>(low[l][k]);
    }

    // Least squares on the consistent system sum_l d_l low_l (embedded) = high.
    LMatrix embed(s, std::vector<long double>(r, 0.0L));
    for (int l = 0; l < r; ++l)
      for (int k = 0; k < r; ++k) embed[l + k][l] = low[l][k];
    LMatrix normal(r, std::vector<long double>(r, 0.0L));
    std::vector<long double> rhs(r, 0.0L);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j)
        for (int a = 0; a < s; ++a) normal[i][j] += embed[a][i] * embed[a][j];
      for (int a = 0; a < s; ++a) rhs[i] += embed[a][i] * high[a];
    }
    const auto d = solve(normal, rhs);
    long double residual = 0.0L;
    for (int a = 0; a < s; ++a) {
      long double v = -high[a];
      for (int l = 0; l < r; ++l) v += embed[a][l] * d[l];
      if (!(std::fabs(v) <= residual)) residual = std::isfinite(v) ? std::fabs(v) : 1.0L;
    }
    if (!(residual < 1e-12L))
      throw Error(ErrorCode::InvalidArgument,
                  "no linear weights exist for order " + std::to_string(order) + " at eta = " +
                      std::to_string(eta));
    SmallVec weights{};
    for (int l = 0; l < r; ++l) weights[l] = static_cast<double>(d[l]);

    plan.rows_.push_back(rows);
    plan.weights_.push_back(weights);
    plan.high_rows_.push_back(high_row);
  }
  for (int l = 0; l < r; ++l) plan.forms_[l] = smoothness_form_for(-(r - 1) + l, r);
  return plan;
}

bool ReconstructionPlan::has_negative_weights() const {
  return !negative_weight_points().empty();
}

std::vector<std::size_t> ReconstructionPlan::negative_weight_points() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < weights_.size(); ++q)
    for (int l = 0; l < r_; ++l)
      if (weights_[q][l] < 0.0) {
        out.push_back(q);
        break;
      }
  return out;
}

SmallVec smoothness_indicators(std::span<const double> window, const ReconstructionPlan& plan) {
  const int r = plan.r();
  SmallVec beta{};
  for (int l = 0; l < r; ++l) {
    const SmallMat& form = plan.smoothness_form(l);
    double s = 0.0;
    for (int a = 0; a < r; ++a) {
      double row = 0.0;
      for (int b = 0; b < r; ++b) row += form[a][b] * window[l + b];
      s += window[l + a] * row;
    }
    beta[l] = std::max(s, 0.0);
  }
  return beta;
}

NonlinearWeights nonlinear_weights(std::span<const double> betas, std::span<const double> d,
                                   double eps) {
  NonlinearWeights w;
  const std::size_t r = std::min(betas.size(), d.size());
  double sum = 0.0;
  for (std::size_t l = 0; l < r; ++l) {
    const double t = eps + betas[l];
    w.omega[l] = d[l] / (t * t);
    sum += w.omega[l];
  }
  for (std::size_t l = 0; l < r; ++l) w.omega[l] /= sum;
  return w;
}

namespace {

inline double weno_value(std::span<const double> window, const ReconstructionPlan& plan,
                         std::size_t q, const SmallVec& beta) {
  const int r = plan.r();
  const SmallMat& rows = plan.low_order_rows(q);
  const SmallVec& d = plan.linear_weights(q);
  double num = 0.0, den = 0.0;
  for (int l = 0; l < r; ++l) {
    double value = 0.0;
    for (int k = 0; k < r; ++k) value += rows[l][k] * window[l + k];
    const double t = plan.epsilon() + beta[l];
    const double a = d[l] / (t * t);
    num += a * value;
    den += a;
  }
  return num / den;
}

}  // namespace

double reconstruct_scalar(std::span<const double> window, const ReconstructionPlan& plan,
                          std::size_t point_index) {
  const SmallVec beta = smoothness_indicators(window, plan);
  return weno_value(window, plan, point_index, beta);
}

void reconstruct_points(std::span<const double> window, const ReconstructionPlan& plan,
                        std::span<double> out) {
  const SmallVec beta = smoothness_indicators(window, plan);
  for (std::size_t q = 0; q < plan.num_points(); ++q) out[q] = weno_value(window, plan, q, beta);
}

void reconstruct_characteristic_1d(std::span<const Conserved<1>> window,
                                   const EigenDecomposition<1>& frozen,
                                   const ReconstructionPlan& plan,
                                   std::span<Conserved<1>> out) {
  constexpr std::size_t nv = kNumVars<1>;
  const int s = plan.stencil_size();
  const std::size_t np = plan.num_points();
  std::array<std::array<double, kMaxStencil>, nv> chars{};
  for (int a = 0; a < s; ++a) {
    const Conserved<1> w = mat_vec(frozen.left, window[a]);
    for (std::size_t v = 0; v < nv; ++v) chars[v][a] = w[v];
  }
  std::array<std::array<double, kMaxStencil>, nv> values{};
  for (std::size_t v = 0; v < nv; ++v)
    reconstruct_points(std::span<const double>(chars[v].data(), s), plan,
                       std::span<double>(values[v].data(), np));
  for (std::size_t q = 0; q < np; ++q) {
    Conserved<1> w{};
    for (std::size_t v = 0; v < nv; ++v) w[v] = values[v][q];
    out[q] = mat_vec(frozen.right, w);
  }
}

void reconstruct_characteristic_2d(std::span<const Conserved<2>> block, int axis,
                                   const EigenDecomposition<2>& frozen_x,
                                   const EigenDecomposition<2>& frozen_y,
                                   const ReconstructionPlan& face_plan,
                                   const ReconstructionPlan& quad_plan,
                                   std::span<Conserved<2>> out_low,
                                   std::span<Conserved<2>> out_high) {
  constexpr std::size_t nv = kNumVars<2>;
  const int s = face_plan.stencil_size();
  const std::size_t nq = quad_plan.num_points();
  const EigenDecomposition<2>& normal = axis == 0 ? frozen_x : frozen_y;
  const EigenDecomposition<2>& tangent = axis == 0 ? frozen_y : frozen_x;

  // Sweep one: face line-averages for every line across the stencil.
  std::array<Conserved<2>, kMaxStencil> line_low{}, line_high{};
  for (int line = 0; line < s; ++line) {
    std::array<std::array<double, kMaxStencil>, nv> chars{};
    for (int a = 0; a < s; ++a) {
      const std::size_t idx = axis == 0 ? static_cast<std::size_t>(line * s + a)
                                        : static_cast<std::size_t>(a * s + line);
      const Conserved<2> w = mat_vec(normal.left, block[idx]);
      for (std::size_t v = 0; v < nv; ++v) chars[v][a] = w[v];
    }
    Conserved<2> lo{}, hi{};
    for (std::size_t v = 0; v < nv; ++v) {
      std::array<double, 2> faces{};
      reconstruct_points(std::span<const double>(chars[v].data(), s), face_plan, faces);
      lo[v] = faces[0];
      hi[v] = faces[1];
    }
    line_low[line] = mat_vec(normal.right, lo);
    line_high[line] = mat_vec(normal.right, hi);
  }

  // Sweep two: quadrature points along the face.
  auto second_sweep = [&](const std::array<Conserved<2>, kMaxStencil>& lines,
                          std::span<Conserved<2>> out) {
    std::array<std::array<double, kMaxStencil>, nv> chars{};
    for (int a = 0; a < s; ++a) {
      const Conserved<2> w = mat_vec(tangent.left, lines[a]);
      for (std::size_t v = 0; v < nv; ++v) chars[v][a] = w[v];
    }
    std::array<std::array<double, kMaxStencil>, nv> values{};
    for (std::size_t v = 0; v < nv; ++v)
      reconstruct_points(std::span<const double>(chars[v].data(), s), quad_plan,
                         std::span<double>(values[v].data(), nq));
    for (std::size_t q = 0; q < nq; ++q) {
      Conserved<2> w{};
      for (std::size_t v = 0; v < nv; ++v) w[v] = values[v][q];
      out[q] = mat_vec(tangent.right, w);
    }
  };
  second_sweep(line_low, out_low);
  second_sweep(line_high, out_high);
}

}  // namespace fvdec
