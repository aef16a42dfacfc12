#pragma once

#include <vector>

namespace fvdec {

/// Nodes on [-1/2, 1/2] with weights normalized to sum to one.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on the reference cell [-1/2, 1/2].
QuadratureRule gauss_legendre(int n);

/// Nodes of the (n+1)-point Gauss-Lobatto rule on [0, 1] (endpoints included).
std::vector<double> gauss_lobatto_nodes(int n);

/// Legendre polynomial P_n and its derivative at x in [-1, 1].
struct LegendreValue {
  long double value;
  long double derivative;
};
LegendreValue legendre(int n, long double x);

}  // namespace fvdec
