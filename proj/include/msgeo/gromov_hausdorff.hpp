#pragma once

#include <utility>

#include "msgeo/correspondence.hpp"
#include "msgeo/metric_space.hpp"

namespace msgeo {

struct GHResult {
  double distance = 0.0;
  Correspondence witness;
};

// Exact GH distance: half the minimum distortion over all irreducible
// correspondences, with the first witness in enumeration order. Guarded at
// max(#X, #Y) <= kGhGuard. The parallel kernel shards by the partition of X.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y);
GHResult gh_exact_serial(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// Closed forms for exact cardinalities 2 and 3. The 3-point form sorts each
// space's distance triple ascending and takes half the max coordinate-wise
// absolute difference.
double gh_two_point(const FiniteMetricSpace& x, const FiniteMetricSpace& y);
double gh_three_point(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// (lower, upper) = (|diam X - diam Y| / 2, max(diam X, diam Y) / 2).
std::pair<double, double> gh_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// d_GH(lambda*Delta_m, X): closed forms for m = 1, m = #X and m > #X;
// partition minimization of max{diam D, lambda - alpha(D), diam X - lambda}
// for 2 <= m < #X.
double gh_to_simplex(const FiniteMetricSpace& x, int m, double lambda);

// (gh_exact(scale(X,l), scale(Y,l)), l * gh_exact(X, Y)) for asserting the
// dilatation identity.
std::pair<double, double> gh_scaling_check(const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y, double lambda);

// The geodesic point R_t: pair set of corr under d_t = (1-t) d_X + t d_Y,
// with pairs closer than tol identified; R_0 = X, R_1 = Y.
FiniteMetricSpace interpolate(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const Correspondence& corr, double t,
                              double tol = default_tolerance());

}  // namespace msgeo
