#pragma once

#include <string>
#include <vector>

#include "msgeo/common.hpp"

namespace msgeo {

// A finite metric space: distinct labelled points and a validated symmetric
// distance table. Construct through validate_space (or the helpers below,
// which produce valid tables by construction).
struct FiniteMetricSpace {
  std::vector<std::string> labels;
  std::vector<double> dist;  // row-major n*n
  int n = 0;

  int size() const { return n; }
  double d(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return dist[static_cast<size_t>(i) * n + j]; }
};

std::vector<std::string> default_labels(int n);

// Checks the metric axioms and returns the space, or throws Error with the
// first violated axiom and its witnessing indices. Codes: NonSquare,
// AsymmetricAt, NegativeAt, NonzeroDiagonal, ZeroOffDiagonal,
// TriangleViolation.
FiniteMetricSpace validate_space(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<double>>& table,
                                 double tol = default_tolerance());

// The simplex lambda*Delta_m: m points, all positive distances equal lambda.
FiniteMetricSpace simplex(int m, double lambda);

// Multiplies every distance by lambda >= 0; lambda = 0 collapses to the
// one-point space.
FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda);

double diameter(const FiniteMetricSpace& x);

// Minimal positive distance; errors with SingletonSpace on one point.
double eps_min(const FiniteMetricSpace& x);

// Subspace induced by the given point indices (kept in the given order).
FiniteMetricSpace subspace(const FiniteMetricSpace& x, const std::vector<int>& idx);

// Builds a space from a point cloud under "euclidean" or "linf".
FiniteMetricSpace space_from_points(const std::vector<std::vector<double>>& points,
                                    const std::string& metric,
                                    double tol = default_tolerance());

}  // namespace msgeo
