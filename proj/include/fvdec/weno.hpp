#pragma once

// WENO point reconstruction of order 2r-1 (r = 2, 3, 4) from uniform cell
// averages, with Jiang-Shu smoothness indicators and characteristic
// projection for the Euler system.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fvdec/euler.hpp"

namespace fvdec {

inline constexpr int kMaxR = 4;
inline constexpr int kMaxStencil = 2 * kMaxR - 1;
inline constexpr double kWenoEpsilon = 1e-6;

using SmallVec = std::array<double, kMaxR>;
using SmallMat = std::array<std::array<double, kMaxR>, kMaxR>;

/// Precomputed coefficients for reconstructing point values at fixed
/// normalized in-cell coordinates eta in [-1/2, 1/2].  Sub-stencil l covers
/// cells i-(r-1)+l ... i+l, so l = 0 is the most left-biased.  Immutable
/// after build().
class ReconstructionPlan {
 public:
  /// order in {3, 5, 7}.  Negative linear weights are flagged, not rejected;
  /// a point where no linear weights exist (order 3 at eta = 0) throws.
  /// epsilon regularizes the nonlinear weights.
  static ReconstructionPlan build(int order, std::span<const double> points,
                                  double epsilon = kWenoEpsilon);

  int order() const { return 2 * r_ - 1; }
  int r() const { return r_; }
  int stencil_size() const { return 2 * r_ - 1; }
  std::size_t num_points() const { return points_.size(); }
  double point(std::size_t q) const { return points_[q]; }
  double epsilon() const { return epsilon_; }

  /// Coefficient of window[l + k] in the l-th low-order value at point q.
  const SmallMat& low_order_rows(std::size_t q) const { return rows_[q]; }
  const SmallVec& linear_weights(std::size_t q) const { return weights_[q]; }
  /// Quadratic form of sub-stencil l: beta_l = a^T B_l a over its r averages.
  const SmallMat& smoothness_form(int l) const { return forms_[l]; }
  /// Coefficients of the full (2r-1)-cell reconstruction at point q.
  const std::array<double, kMaxStencil>& high_order_row(std::size_t q) const {
    return high_rows_[q];
  }

  bool has_negative_weights() const;
  std::vector<std::size_t> negative_weight_points() const;

 private:
  int r_ = 0;
  double epsilon_ = kWenoEpsilon;
  std::vector<double> points_;
  std::vector<SmallMat> rows_;
  std::vector<SmallVec> weights_;
  std::vector<std::array<double, kMaxStencil>> high_rows_;
  std::array<SmallMat, kMaxR> forms_{};
};

struct NonlinearWeights {
  SmallVec omega{};
};

/// beta_l >= 0 for each of the r sub-stencils.  window.size() == 2r-1.
SmallVec smoothness_indicators(std::span<const double> window, const ReconstructionPlan& plan);

/// omega_l = a_l / sum(a), a_l = d_l / (eps + beta_l)^2.
NonlinearWeights nonlinear_weights(std::span<const double> betas, std::span<const double> d,
                                   double eps = kWenoEpsilon);

double reconstruct_scalar(std::span<const double> window, const ReconstructionPlan& plan,
                          std::size_t point_index);

/// All plan points at once; the smoothness indicators are computed once.
void reconstruct_points(std::span<const double> window, const ReconstructionPlan& plan,
                        std::span<double> out);

/// Characteristic WENO in 1D: window holds the 2r-1 cell averages centred on
/// the cell, `frozen` is the eigenstructure at the central average.
void reconstruct_characteristic_1d(std::span<const Conserved<1>> window,
                                   const EigenDecomposition<1>& frozen,
                                   const ReconstructionPlan& plan,
                                   std::span<Conserved<1>> out);

/// Characteristic WENO in 2D for the faces normal to `axis` (0: x, 1: y).
/// block[b * S + a] is the cell at x-offset a and y-offset b (S = 2r-1).
/// Sweep one reconstructs face line-averages with face_plan (points -1/2,
/// +1/2) along `axis`; sweep two reconstructs quadrature-point values along
/// the other axis with quad_plan.  Each sweep projects with its own frozen
/// eigenstructure.  out_low / out_high receive the values on the -1/2 and
/// +1/2 faces at every quadrature point.
void reconstruct_characteristic_2d(std::span<const Conserved<2>> block, int axis,
                                   const EigenDecomposition<2>& frozen_x,
                                   const EigenDecomposition<2>& frozen_y,
                                   const ReconstructionPlan& face_plan,
                                   const ReconstructionPlan& quad_plan,
                                   std::span<Conserved<2>> out_low,
                                   std::span<Conserved<2>> out_high);

}  // namespace fvdec
