#pragma once

#include <tuple>
#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

// A spanning tree: n-1 edges (i, j, length), i < j, sorted by
// (length, i, j) ascending.
struct Tree {
  int n = 0;
  std::vector<std::tuple<int, int, double>> edges;
  double length() const;
};

// Kruskal on the complete distance graph with (length, i, j) lexicographic
// tie-breaking.
Tree mst(const FiniteMetricSpace& x);
double mst_length(const FiniteMetricSpace& x);

// MST edge lengths sorted descending (tree-independent).
std::vector<double> mst_spectrum(const FiniteMetricSpace& x);

// sigma_k = max over (k+1)-block partitions D of alpha(D), k = 1..n-1.
std::vector<double> mst_spectrum_by_partitions(const FiniteMetricSpace& x);

struct SpectrumGH {
  std::vector<double> spectrum;
  double mst_length = 0.0;  // lambda*(n-1) - 2*sum of d_GH(lambda*Delta_{k+1}, X)
};

// sigma_k = lambda - 2*d_GH(lambda*Delta_{k+1}, X); requires
// lambda >= 2*diameter.
SpectrumGH mst_spectrum_by_gh(const FiniteMetricSpace& x, double lambda,
                              double tol = default_tolerance());

}  // namespace msgeo
