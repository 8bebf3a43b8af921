#pragma once

#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kCovPackGuard = 20;

// Least number of open eps-balls, centered at subset points, covering the
// subset. Exact (set-cover DP over point bitmasks). A point lies in the open
// ball of radius r when d < r - tol.
int cov(const FiniteMetricSpace& x, const std::vector<int>& subset, double eps,
        double tol = default_tolerance());

// Greatest number of pairwise disjoint open (eps/2)-balls centered at subset
// points. Exact (max independent set on the ball-intersection graph).
int pack(const FiniteMetricSpace& x, const std::vector<int>& subset, double eps,
         double tol = default_tolerance());

}  // namespace msgeo
