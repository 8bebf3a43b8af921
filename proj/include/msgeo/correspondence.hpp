#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kGhGuard = 8;

// A relation between index sets {0..left_size-1} and {0..right_size-1} whose
// projections onto both sides are surjective. Pairs are kept sorted.
struct Correspondence {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> pairs;
};

// Throws InvalidCorrespondence unless the relation is a correspondence for
// the given sizes.
void validate_correspondence(const Correspondence& r);

// sup over related pairs of | |xx'| - |yy'| |.
double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Correspondence& r);

// Streams every irreducible correspondence exactly once: for each block count
// k, each pair of k-block partitions (restricted-growth-string order) and each
// block bijection (lexicographic) in which every matched pair has a singleton
// side.
void for_each_irreducible(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                          const std::function<void(const Correspondence&)>& fn);

std::vector<Correspondence> enumerate_irreducible(const FiniteMetricSpace& x,
                                                  const FiniteMetricSpace& y);

// Single-valued selection: smallest related right index per left index.
std::vector<int> extract_map(const Correspondence& r);

}  // namespace msgeo
