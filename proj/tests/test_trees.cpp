#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "msgeo/metric_space.hpp"
#include "msgeo/mst.hpp"
#include "msgeo/random_gen.hpp"
#include "msgeo/steiner.hpp"
#include "oracle_helpers.hpp"

using namespace msgeo;
using namespace msgeo_test;

namespace {

// Unit simplex on {0,1,2} plus a center at distance 0.6 from each vertex.
FiniteMetricSpace simplex_with_center() {
  return validate_space(default_labels(4), {{0, 1, 1, 0.6},
                                            {1, 0, 1, 0.6},
                                            {1, 1, 0, 0.6},
                                            {0.6, 0.6, 0.6, 0}});
}

bool is_spanning_tree(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int merges = 0;
  for (const auto& [i, j, len] : edges) {
    int a = find(i), b = find(j);
    if (a == b) return false;
    parent[a] = b;
    ++merges;
  }
  return merges == n - 1;
}

}  // namespace

TEST_CASE("mst on the line 0,1,3,7") {
  FiniteMetricSpace line = line_space({0, 1, 3, 7});
  Tree t = mst(line);
  CHECK_EQ(t.n, 4);
  std::vector<std::tuple<int, int, double>> want{{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 4.0}};
  CHECK(t.edges == want);
  CHECK_EQ(t.length(), 7.0);
  CHECK_EQ(mst_length(line), 7.0);
}

TEST_CASE("mst edge cases and tie-breaking") {
  Tree single = mst(simplex(1, 0.0));
  CHECK_EQ(single.n, 1);
  CHECK(single.edges.empty());
  CHECK_EQ(single.length(), 0.0);

  // Equal distances: the lexicographic tie-break yields the star at vertex 0.
  Tree star = mst(simplex(4, 1.0));
  std::vector<std::tuple<int, int, double>> want{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  CHECK(star.edges == want);
  CHECK_EQ(star.length(), 3.0);
}

TEST_CASE("mst produces a spanning tree on random spaces") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 15; ++it) {
    FiniteMetricSpace x = random_cloud_space(rng, 2 + rand_int(rng, 0, 8), 3, "euclidean");
    Tree t = mst(x);
    CHECK(is_spanning_tree(x.n, t.edges));
    for (const auto& [i, j, len] : t.edges) CHECK_EQ(len, x.d(i, j));
  }
}

TEST_CASE("mst_spectrum basics") {
  CHECK_EQ(mst_spectrum(line_space({0, 1, 3, 7})), std::vector<double>({4, 2, 1}));
  CHECK_EQ(mst_spectrum(simplex(3, 2.5)), std::vector<double>({2.5, 2.5}));
  CHECK_EQ(mst_spectrum(two_point_space(6.0)), std::vector<double>{6.0});
  CHECK_EQ(error_code([] { mst_spectrum(simplex(1, 0.0)); }), "SingletonSpace");
}

TEST_CASE("mst_spectrum_by_partitions matches and hits its endpoints") {
  FiniteMetricSpace line = line_space({0, 1, 3, 7});
  std::vector<double> sp = mst_spectrum_by_partitions(line);
  CHECK_EQ(sp, std::vector<double>({4, 2, 1}));
  CHECK_EQ(sp.front(), 4.0);                // best 2-block split is {0,1,3}|{7}
  CHECK_EQ(sp.back(), eps_min(line));       // all-singleton partition
  CHECK_EQ(mst_spectrum_by_partitions(simplex(3, 1.0)), std::vector<double>({1, 1}));
  CHECK_EQ(error_code([] { mst_spectrum_by_partitions(simplex(13, 1.0)); }), "TooLarge");
}

TEST_CASE("mst_spectrum_by_gh reproduces the spectrum and the length identity") {
  FiniteMetricSpace line = line_space({0, 1, 3, 7});
  SpectrumGH via = mst_spectrum_by_gh(line, 14.0);
  REQUIRE_EQ(via.spectrum.size(), 3u);
  for (int k = 0; k < 3; ++k) CHECK(near(via.spectrum[k], mst_spectrum(line)[k], 1e-9));
  CHECK(near(via.mst_length, 7.0, 4e-9));

  SpectrumGH d3 = mst_spectrum_by_gh(simplex(3, 1.0), 2.0);
  CHECK(near(d3.spectrum[0], 1.0, 1e-9));
  CHECK(near(d3.spectrum[1], 1.0, 1e-9));

  SpectrumGH two = mst_spectrum_by_gh(two_point_space(5.0), 10.0);
  CHECK(near(two.spectrum[0], 5.0, 1e-9));

  CHECK_EQ(error_code([&] { mst_spectrum_by_gh(line, 13.0); }), "LambdaTooSmall");
  CHECK_EQ(error_code([] { mst_spectrum_by_gh(simplex(13, 1.0), 2.0); }), "TooLarge");
}

TEST_CASE("three spectrum routes agree on random spaces") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 25; ++it) {
    int n = rand_int(rng, 2, 6);
    FiniteMetricSpace x = random_int_space(rng, n);
    std::vector<double> a = mst_spectrum(x);
    std::vector<double> b = mst_spectrum_by_partitions(x);
    SpectrumGH c = mst_spectrum_by_gh(x, 2.0 * diameter(x));
    REQUIRE_EQ(a.size(), b.size());
    REQUIRE_EQ(a.size(), c.spectrum.size());
    for (size_t k = 0; k < a.size(); ++k) {
      CHECK(near(a[k], b[k], 1e-9));
      CHECK(near(a[k], c.spectrum[k], 1e-9));
    }
    CHECK(near(c.mst_length, mst_length(x), n * 1e-9));
  }
}

TEST_CASE("spectrum is invariant under relabeling") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 10; ++it) {
    int n = rand_int(rng, 2, 6);
    FiniteMetricSpace x = random_int_space(rng, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK_EQ(mst_spectrum(x), mst_spectrum(permuted_space(x, perm)));
  }
}

TEST_CASE("a closest cross-cut pair always fits into some mst") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 15; ++it) {
    int n = rand_int(rng, 3, 7);
    FiniteMetricSpace x = random_cloud_space(rng, n, 2, "euclidean");
    uint32_t cut = 1 + rng() % ((1u << n) - 2);  // proper non-empty block
    int v1 = -1, v2 = -1;
    double best = 1e100;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((cut >> i & 1) && !(cut >> j & 1) && x.d(i, j) < best) {
          best = x.d(i, j);
          v1 = i;
          v2 = j;
        }
    CHECK(near(mst_length_with_forced_edge(x, v1, v2), mst_length(x), 1e-9));
  }
}

TEST_CASE("smt_by_supersets on handmade instances") {
  FiniteMetricSpace amb = simplex_with_center();
  SmtResult res = smt_by_supersets(amb, {0, 1, 2});
  CHECK(near(res.length, 1.8, 1e-12));
  CHECK_EQ(res.vertices, std::vector<int>({0, 1, 2, 3}));
  CHECK(near(mst_length(subspace(amb, res.vertices)), res.length, 1e-12));

  // Without the shortcut point the answer is the plain mst.
  FiniteMetricSpace d3 = simplex(3, 1.0);
  SmtResult all = smt_by_supersets(d3, {0, 1, 2});
  CHECK_EQ(all.length, 2.0);

  SmtResult lone = smt_by_supersets(amb, {3});
  CHECK_EQ(lone.length, 0.0);
  CHECK_EQ(lone.vertices, std::vector<int>{3});

  CHECK_EQ(error_code([] { smt_by_supersets(simplex(17, 1.0), {0}); }), "TooLarge");
  CHECK_EQ(error_code([&] { smt_by_supersets(amb, {}); }), "EmptySet");
  CHECK_EQ(error_code([&] { smt_by_supersets(amb, {9}); }), "IndexOutOfRange");
}

TEST_CASE("topology enumeration counts and shape") {
  CHECK_EQ(enumerate_topologies(2).size(), 1u);
  CHECK_EQ(enumerate_topologies(3).size(), 1u);
  CHECK_EQ(enumerate_topologies(4).size(), 3u);
  CHECK_EQ(enumerate_topologies(5).size(), 15u);
  CHECK_EQ(enumerate_topologies(6).size(), 105u);
  CHECK_EQ(enumerate_topologies(7).size(), 945u);
  CHECK_EQ(error_code([] { enumerate_topologies(1); }), "NOutOfRange");
  CHECK_EQ(error_code([] { enumerate_topologies(8); }), "NOutOfRange");

  for (int n = 2; n <= 6; ++n) {
    for (const SteinerTopology& t : enumerate_topologies(n)) {
      int verts = n + std::max(0, n - 2);
      CHECK_EQ(static_cast<int>(t.edges.size()), verts - 1);
      std::vector<int> deg(verts, 0);
      std::vector<std::tuple<int, int, double>> as_tuples;
      for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
        as_tuples.emplace_back(u, v, 0.0);
      }
      for (int v = 0; v < n; ++v) CHECK_EQ(deg[v], 1);
      for (int v = n; v < verts; ++v) CHECK_EQ(deg[v], 3);
      CHECK(is_spanning_tree(verts, as_tuples));
    }
  }
}

TEST_CASE("the three 4-point topologies are pairwise non-isomorphic") {
  auto topos = enumerate_topologies(4);
  REQUIRE_EQ(topos.size(), 3u);
  // Any isomorphism fixing the boundary pointwise can only swap the two
  // interior vertices 4 and 5.
  auto relabeled = [](const SteinerTopology& t, bool swap_interior) {
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges) {
      int a = (swap_interior && u >= 4) ? (9 - u) : u;
      int b = (swap_interior && v >= 4) ? (9 - v) : v;
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    return edges;
  };
  for (size_t i = 0; i < topos.size(); ++i)
    for (size_t j = i + 1; j < topos.size(); ++j) {
      CHECK(relabeled(topos[i], false) != relabeled(topos[j], false));
      CHECK(relabeled(topos[i], true) != relabeled(topos[j], false));
    }
}

TEST_CASE("smt_by_networks on handmade instances") {
  FiniteMetricSpace d3 = simplex(3, 1.0);
  NetworkResult net = smt_by_networks(d3, {0, 1, 2});
  CHECK_EQ(net.length, 2.0);
  CHECK_EQ(net.interior.size(), 1u);

  FiniteMetricSpace amb = simplex_with_center();
  NetworkResult center = smt_by_networks(amb, {0, 1, 2});
  CHECK(near(center.length, 1.8, 1e-12));
  CHECK_EQ(center.interior, std::vector<int>{3});
  double sum = 0.0;
  for (const auto& [u, v, len] : center.edges) {
    CHECK_EQ(len, amb.d(u, v));
    sum += len;
  }
  CHECK(near(sum, center.length, 1e-12));

  NetworkResult pairwise = smt_by_networks(amb, {1, 3});
  CHECK_EQ(pairwise.length, amb.d(1, 3));

  NetworkResult lone = smt_by_networks(amb, {2});
  CHECK_EQ(lone.length, 0.0);

  CHECK_EQ(error_code([] {
             smt_by_networks(simplex(9, 1.0), {0, 1, 2, 3, 4, 5, 6, 7});
           }),
           "TooLarge");
}

TEST_CASE("network and superset routes agree") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 25; ++it) {
    int n = rand_int(rng, 2, 10);
    FiniteMetricSpace amb = random_cloud_space(rng, n, 2, "euclidean");
    int msize = rand_int(rng, 1, std::min(4, n));
    std::set<int> mset;
    while (static_cast<int>(mset.size()) < msize) mset.insert(rand_int(rng, 0, n - 1));
    std::vector<int> m(mset.begin(), mset.end());

    SmtResult sup = smt_by_supersets(amb, m);
    NetworkResult net = smt_by_networks(amb, m);
    CHECK(near(sup.length, net.length, 1e-9));
    if (m.size() >= 2) {
      double direct = mst_length(subspace(amb, m));
      CHECK(sup.length <= direct + 1e-12);
    }
    SmtResult sups = smt_by_supersets_serial(amb, m);
    CHECK_EQ(sup.length, sups.length);
    CHECK_EQ(sup.vertices, sups.vertices);
    NetworkResult nets = smt_by_networks_serial(amb, m);
    CHECK_EQ(net.length, nets.length);
    CHECK_EQ(net.topology, nets.topology);
    CHECK_EQ(net.interior, nets.interior);
  }
}
