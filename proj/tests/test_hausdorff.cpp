#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "msgeo/hausdorff.hpp"
#include "msgeo/metric_space.hpp"
#include "oracle_helpers.hpp"

using namespace msgeo;
using namespace msgeo_test;

namespace {

// Half-unit grid 0, 0.5, ..., 5 with A = [0,2] and B = [3,5].
SubsetPair grid_pair() {
  std::vector<double> coords;
  for (int i = 0; i <= 10; ++i) coords.push_back(0.5 * i);
  FiniteMetricSpace grid = line_space(coords);
  std::vector<int> a, b;
  for (int i = 0; i <= 4; ++i) a.push_back(i);
  for (int i = 6; i <= 10; ++i) b.push_back(i);
  return make_subset_pair(grid, a, b);
}

// Regular hexagon with unit side: the six vertices followed by three extra
// points per edge at parameters 0.25, 0.5, 0.75.
FiniteMetricSpace hexagon_cloud() {
  const double pi = 3.14159265358979323846;
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < 6; ++k)
    pts.push_back({std::cos(pi / 3.0 * k), std::sin(pi / 3.0 * k)});
  for (int k = 0; k < 6; ++k) {
    const auto& u = pts[k];
    const auto& v = pts[(k + 1) % 6];
    for (double t : {0.25, 0.5, 0.75})
      pts.push_back({u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])});
  }
  return space_from_points(pts, "euclidean");
}

}  // namespace

TEST_CASE("dist_point_set is the min distance into the set") {
  FiniteMetricSpace line = line_space({0, 1, 3});
  CHECK_EQ(dist_point_set(line, 2, {0, 1}), 2.0);
  CHECK_EQ(dist_point_set(line, 1, {0, 1}), 0.0);
  CHECK_EQ(dist_point_set(line, 0, {2}), 3.0);
  CHECK_EQ(error_code([&] { dist_point_set(line, 0, {}); }), "EmptySet");
}

TEST_CASE("hausdorff distance on line examples") {
  FiniteMetricSpace line = line_space({0, 1, 2, 5});
  CHECK_EQ(hausdorff(line, {0, 1}, {2, 3}), 4.0);
  CHECK_EQ(hausdorff(line, {0, 1}, {0, 1}), 0.0);
  CHECK_EQ(hausdorff(line, {2, 3}, {0, 1}), 4.0);  // symmetry

  FiniteMetricSpace d3 = simplex(3, 1.0);
  CHECK_EQ(hausdorff(d3, {0}, {1, 2}), 1.0);
}

TEST_CASE("make_subset_pair validates and normalizes") {
  FiniteMetricSpace line = line_space({0, 1, 2});
  SubsetPair p = make_subset_pair(line, {2, 0, 2}, {1});
  CHECK_EQ(p.a, std::vector<int>{0, 2});
  CHECK_EQ(error_code([&] { make_subset_pair(line, {}, {1}); }), "EmptySet");
  CHECK_EQ(error_code([&] { make_subset_pair(line, {0}, {7}); }), "IndexOutOfRange");
}

TEST_CASE("cs_set matches the interval picture on the grid") {
  SubsetPair pair = grid_pair();
  CHECK_EQ(hausdorff(pair), 3.0);

  // C_1.5 = grid points in [1.5, 3.5].
  std::vector<int> c = cs_set(pair, 1.5);
  CHECK_EQ(c, std::vector<int>({3, 4, 5, 6, 7}));

  // C_0 contains A.
  std::vector<int> c0 = cs_set(pair, 0.0);
  for (int i : pair.a) CHECK(std::count(c0.begin(), c0.end(), i) == 1);

  CHECK_EQ(error_code([&] { cs_set(pair, -0.5); }), "SOutOfRange");
  CHECK_EQ(error_code([&] { cs_set(pair, 3.5); }), "SOutOfRange");
}

TEST_CASE("cs_set can be empty") {
  FiniteMetricSpace two = two_point_space(2.0);
  SubsetPair pair = make_subset_pair(two, {0}, {1});
  CHECK_EQ(hausdorff(pair), 2.0);
  CHECK(cs_set(pair, 1.0).empty());
}

TEST_CASE("is_s_position checks both Hausdorff equations") {
  SubsetPair pair = grid_pair();
  CHECK(is_s_position(pair, pair.a, 0.0));
  CHECK(is_s_position(pair, pair.b, 3.0));
  CHECK_FALSE(is_s_position(pair, {5}, 1.5));  // the midpoint 2.5 alone sits at 2.5
  CHECK(is_s_position(pair, cs_set(pair, 1.5), 1.5));
  CHECK_EQ(error_code([&] { is_s_position(pair, {}, 1.0); }), "EmptyC");
  CHECK_EQ(error_code([&] { is_s_position(pair, {0}, 99.0); }), "SOutOfRange");
}

TEST_CASE("count_s_position_sets basics") {
  // Three colinear points: C_1 is the single midpoint.
  FiniteMetricSpace line = line_space({0, 1, 2});
  SubsetPair pair = make_subset_pair(line, {0}, {2});
  std::vector<int> c1 = cs_set(pair, 1.0);
  CHECK_EQ(c1, std::vector<int>{1});
  CHECK_EQ(count_s_position_sets(pair, c1, 1.0), 1);

  // No candidates, no sets.
  CHECK_EQ(count_s_position_sets(pair, {}, 1.0), 0);

  // Guard on the candidate count.
  std::vector<double> coords;
  for (int i = 0; i < 23; ++i) coords.push_back(i);
  FiniteMetricSpace big = line_space(coords);
  SubsetPair bp = make_subset_pair(big, {0}, {22});
  std::vector<int> cands;
  for (int i = 1; i < 22; ++i) cands.push_back(i);
  CHECK_EQ(error_code([&] { count_s_position_sets(bp, cands, 11.0); }), "TooLarge");
}

TEST_CASE("hexagon configuration counts 18 sets at every s") {
  FiniteMetricSpace hex = hexagon_cloud();
  SubsetPair pair = make_subset_pair(hex, {0, 2, 4}, {1, 3, 5});
  CHECK(near(hausdorff(pair), 1.0, 1e-12));
  for (double s : {0.25, 0.5, 0.75}) {
    std::vector<int> cands = cs_set(pair, s);
    CHECK_EQ(static_cast<int>(cands.size()), 6);
    CHECK_EQ(count_s_position_sets(pair, cands, s), 18);
    CHECK_EQ(count_s_position_sets_serial(pair, cands, s), 18);
  }
}

TEST_CASE("every set in s-position lies inside cs_set") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 20; ++it) {
    // Random little line clouds keep the subset enumeration cheap.
    std::uniform_real_distribution<double> u(0.0, 4.0);
    std::vector<double> coords;
    int n = 4 + static_cast<int>(rng() % 4);
    std::set<double> uniq;
    while (static_cast<int>(uniq.size()) < n) uniq.insert(std::round(u(rng) * 8.0) / 8.0);
    coords.assign(uniq.begin(), uniq.end());
    FiniteMetricSpace x = line_space(coords);

    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) ((rng() & 1) ? a : b).push_back(i);
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(n - 1);
    SubsetPair pair = make_subset_pair(x, a, b);
    double r = hausdorff(pair);
    for (double frac : {0.0, 0.3, 0.5, 1.0}) {
      double s = frac * r;
      std::vector<int> inside = cs_set(pair, s);
      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> c;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) c.push_back(i);
        if (is_s_position(pair, c, s))
          for (int i : c) CHECK(std::count(inside.begin(), inside.end(), i) == 1);
      }
    }
  }
}

TEST_CASE("parallel and serial counts agree") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 10; ++it) {
    std::set<double> uniq;
    while (uniq.size() < 12) uniq.insert(std::round((rng() % 6400) / 400.0 * 8.0) / 8.0);
    std::vector<double> coords(uniq.begin(), uniq.end());
    FiniteMetricSpace x = line_space(coords);
    SubsetPair pair = make_subset_pair(x, {0, 1, 2}, {9, 10, 11});
    double r = hausdorff(pair);
    std::vector<int> cands(12);
    for (int i = 0; i < 12; ++i) cands[i] = i;
    for (double frac : {0.25, 0.5}) {
      double s = frac * r;
      CHECK_EQ(count_s_position_sets(pair, cands, s),
               count_s_position_sets_serial(pair, cands, s));
    }
  }
}
