#pragma once

#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kSPositionGuard = 20;

// Two non-empty index subsets of a common ambient space.
struct SubsetPair {
  FiniteMetricSpace ambient;
  std::vector<int> a;
  std::vector<int> b;
};

// Validates ranges and non-emptiness; sorts and deduplicates the index sets.
SubsetPair make_subset_pair(FiniteMetricSpace ambient, std::vector<int> a,
                            std::vector<int> b);

// |xS| = min over s in S of dist(i, s).
double dist_point_set(const FiniteMetricSpace& x, int i, const std::vector<int>& s);

// d_H via the sup-inf form: max of the two directed deviations.
double hausdorff(const FiniteMetricSpace& ambient, const std::vector<int>& a,
                 const std::vector<int>& b);
double hausdorff(const SubsetPair& pair);

// C_s(A,B): ambient points within s of A and within r-s of B (closed balls,
// boundary admitted within tol). r = hausdorff(pair).
std::vector<int> cs_set(const SubsetPair& pair, double s, double tol = default_tolerance());

// True iff d_H(A,C) = s and d_H(C,B) = r-s, both within tol.
bool is_s_position(const SubsetPair& pair, const std::vector<int>& c, double s,
                   double tol = default_tolerance());

// Counts non-empty C subseteq candidates with is_s_position true. Exhaustive
// over subsets (guarded); the parallel kernel shards by subset rank.
long long count_s_position_sets(const SubsetPair& pair, const std::vector<int>& candidates,
                                double s, double tol = default_tolerance());
long long count_s_position_sets_serial(const SubsetPair& pair,
                                       const std::vector<int>& candidates, double s,
                                       double tol = default_tolerance());

}  // namespace msgeo
