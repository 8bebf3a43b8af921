#include "msgeo/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "msgeo/common.hpp"
#include "msgeo/covering.hpp"
#include "msgeo/graphs.hpp"
#include "msgeo/gromov_hausdorff.hpp"
#include "msgeo/hausdorff.hpp"
#include "msgeo/metric_space.hpp"
#include "msgeo/mst.hpp"
#include "msgeo/partitions.hpp"
#include "msgeo/random_gen.hpp"
#include "msgeo/steiner.hpp"

namespace msgeo {

namespace {

struct Checker {
  SuiteResult r;

  void note_dev(double dev) { r.max_dev = std::max(r.max_dev, dev); }

  void fail_with(const std::string& msg) {
    if (r.pass) {
      r.pass = false;
      r.detail = msg;
    }
  }

  void near(double got, double want, double tol, const std::string& what) {
    ++r.checks;
    double dev = std::fabs(got - want);
    note_dev(dev);
    if (!(dev <= tol))
      fail_with(what + ": got " + format_double(got) + ", want " + format_double(want));
  }

  void le(double a, double b, double tol, const std::string& what) {
    ++r.checks;
    note_dev(std::max(0.0, a - b));
    if (!(a <= b + tol))
      fail_with(what + ": " + format_double(a) + " exceeds " + format_double(b));
  }

  void eq(long long got, long long want, const std::string& what) {
    ++r.checks;
    note_dev(static_cast<double>(std::llabs(got - want)));
    if (got != want)
      fail_with(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }

  void ok(bool cond, const std::string& what) {
    ++r.checks;
    if (!cond) fail_with(what);
  }
};

std::vector<int> random_subset(std::mt19937_64& rng, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (rng() & 1) s.push_back(i);
  if (s.empty()) s.push_back(rand_int(rng, 0, n - 1));
  return s;
}

std::vector<int> random_subset_of(std::mt19937_64& rng, const std::vector<int>& base,
                                  bool allow_empty) {
  std::vector<int> s;
  for (int i : base)
    if (rng() & 1) s.push_back(i);
  if (s.empty() && !allow_empty) s.push_back(base[rand_int(rng, 0, (int)base.size() - 1)]);
  return s;
}

FiniteMetricSpace two_point_space(double d) {
  FiniteMetricSpace x;
  x.n = 2;
  x.labels = default_labels(2);
  x.dist = {0.0, d, d, 0.0};
  return x;
}

FiniteMetricSpace permuted_copy(std::mt19937_64& rng, const FiniteMetricSpace& x) {
  std::vector<int> perm(x.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = x.n - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(rng, 0, i)]);
  FiniteMetricSpace y;
  y.n = x.n;
  y.labels = default_labels(x.n);
  y.dist.assign(x.dist.size(), 0.0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) y.at(i, j) = x.d(perm[i], perm[j]);
  return y;
}

// Regular hexagon with side 1 plus the three division points of every edge,
// vertices first.
FiniteMetricSpace hexagon_ambient() {
  std::vector<std::vector<double>> pts;
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < 6; ++k)
    pts.push_back({std::cos(pi / 3.0 * k), std::sin(pi / 3.0 * k)});
  for (int k = 0; k < 6; ++k) {
    const auto& u = pts[k];
    const auto& v = pts[(k + 1) % 6];
    for (double t : {0.25, 0.5, 0.75})
      pts.push_back({u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])});
  }
  return space_from_points(pts, "euclidean", default_tolerance());
}

BipartiteGraph bipartite_cycle(int k) {
  // C_{2k}: left i sits between right i-1 and right i along the cycle.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back((i + 1) % k, i);
  }
  return make_bipartite(k, k, std::move(edges));
}

void suite_hexagon(Checker& c) {
  FiniteMetricSpace hex = hexagon_ambient();
  SubsetPair pair = make_subset_pair(hex, {0, 2, 4}, {1, 3, 5});
  double r = hausdorff(pair);
  c.near(r, 1.0, 1e-12, "hexagon d_H(A,B)");
  for (double s : {0.25, 0.5, 0.75}) {
    std::vector<int> cand = cs_set(pair, s);
    c.eq(static_cast<long long>(count_s_position_sets(pair, cand, s)), 18,
         "hexagon count at s=" + format_double(s));
  }
}

void suite_spectrum(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 3, 6));
    std::vector<double> a = mst_spectrum(x);
    std::vector<double> b = mst_spectrum_by_partitions(x);
    SpectrumGH g = mst_spectrum_by_gh(x, 2.0 * diameter(x), default_tolerance());
    c.eq((long long)a.size(), x.n - 1, "spectrum length");
    for (size_t k = 0; k < a.size(); ++k) {
      c.near(b[k], a[k], 1e-9, "partition-route sigma_" + std::to_string(k + 1));
      c.near(g.spectrum[k], a[k], 1e-9, "gh-route sigma_" + std::to_string(k + 1));
    }
    c.near(g.mst_length, mst_length(x), x.n * 1e-9, "gh-route mst length");
  }
}

void suite_simplex(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 5));
    double diam = diameter(x);
    for (int m = 1; m <= 6; ++m)
      for (double lambda : {0.5, 1.0, diam, 2.0 * diam}) {
        double closed = gh_to_simplex(x, m, lambda);
        double exact = gh_exact(simplex(m, lambda), x).distance;
        c.near(closed, exact, 1e-9,
               "simplex formula m=" + std::to_string(m) + " lambda=" + format_double(lambda));
      }
  }
}

void suite_closed_forms(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = two_point_space(0.5 + 4.5 * rand_unit(rng));
    FiniteMetricSpace y = two_point_space(0.5 + 4.5 * rand_unit(rng));
    c.near(gh_two_point(x, y), gh_exact(x, y).distance, 1e-12, "two-point formula");
  }
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_cloud_space(rng, 3, 2, "euclidean");
    FiniteMetricSpace y = random_cloud_space(rng, 3, 2, "euclidean");
    c.near(gh_three_point(x, y), gh_exact(x, y).distance, 1e-12, "three-point formula");
  }
  int diam_samples = std::max(1, samples / 5);
  for (int it = 0; it < diam_samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 6));
    c.near(gh_exact(simplex(1, 0), x).distance, 0.5 * diameter(x), 1e-12,
           "singleton distance = half diameter");
  }
}

void suite_axioms(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 4));
    FiniteMetricSpace y = random_int_space(rng, rand_int(rng, 2, 4));
    FiniteMetricSpace z = random_int_space(rng, rand_int(rng, 2, 4));
    double dxy = gh_exact(x, y).distance;
    double dyx = gh_exact(y, x).distance;
    double dyz = gh_exact(y, z).distance;
    double dxz = gh_exact(x, z).distance;
    c.near(dxy, dyx, 2e-9, "gh symmetry");
    c.le(dxz, dxy + dyz, 2e-9, "gh triangle inequality");
    c.near(gh_exact(x, permuted_copy(rng, x)).distance, 0.0, 0.0, "gh on isometric pair");
  }
}

void suite_geodesic(Checker& c, std::mt19937_64& rng, int samples) {
  const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 4));
    FiniteMetricSpace y = random_int_space(rng, rand_int(rng, 2, 4));
    GHResult res = gh_exact(x, y);
    for (double s : grid)
      for (double t : grid) {
        if (s > t) continue;
        FiniteMetricSpace zs = interpolate(x, y, res.witness, s);
        FiniteMetricSpace zt = interpolate(x, y, res.witness, t);
        c.near(gh_exact(zs, zt).distance, (t - s) * res.distance, 2e-9,
               "geodesic speed between t=" + format_double(s) + " and " + format_double(t));
      }
  }
}

void suite_borsuk(Checker& c, std::mt19937_64& rng, int samples) {
  double tol = default_tolerance();
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 6));
    double diam = diameter(x);
    for (int m = 2; m <= x.n; ++m) {
      bool brute = borsuk_partitionable(x, m, tol);
      bool viagh = borsuk_by_gh(x, m, diam / 2.0, tol);
      c.ok(brute == viagh, "borsuk disagreement at m=" + std::to_string(m));
    }
  }
}

void suite_graph_numbers(Checker& c) {
  // Canonical forms of all graphs on 5 vertices under the 120 relabelings.
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) slots.emplace_back(u, v);
  auto slot_id = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    for (size_t s = 0; s < slots.size(); ++s)
      if (slots[s] == std::make_pair(u, v)) return (int)s;
    return -1;
  };
  std::vector<int> perm = {0, 1, 2, 3, 4};
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> reps;
  std::vector<char> seen(1 << 10, 0);
  for (int code = 0; code < (1 << 10); ++code) {
    if (seen[code]) continue;
    int canon = code;
    for (const auto& p : perms) {
      int mapped = 0;
      for (size_t s = 0; s < slots.size(); ++s)
        if (code >> s & 1) mapped |= 1 << slot_id(p[slots[s].first], p[slots[s].second]);
      seen[mapped] = 1;
      canon = std::min(canon, mapped);
    }
    reps.push_back(canon);
  }
  c.eq((long long)reps.size(), 34, "isomorphism classes on 5 vertices");

  for (int code : reps) {
    std::vector<std::pair<int, int>> edges;
    for (size_t s = 0; s < slots.size(); ++s)
      if (code >> s & 1) edges.push_back(slots[s]);
    SimpleGraph g = make_graph(5, edges);
    SimpleGraph gc = complement(g);
    int theta_b = clique_cover_brute(g);
    int gamma_b = chromatic_brute(g);
    c.eq(clique_cover_by_gh(g, 1.0, 2.0), theta_b, "theta via gh, graph " + std::to_string(code));
    c.eq(chromatic_by_gh(g, 1.0, 2.0), gamma_b, "gamma via gh, graph " + std::to_string(code));
    c.eq(clique_cover_brute(g), chromatic_brute(gc),
         "theta(G) = gamma(G') for graph " + std::to_string(code));
  }
}

void suite_edge_covers(Checker& c) {
  BipartiteGraph k22 = make_bipartite(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  c.eq((long long)count_edge_covers(k22), 7, "edge covers of K_{2,2}");
  c.eq((long long)count_edge_covers_serial(k22), 7, "serial edge covers of K_{2,2}");
  c.eq((long long)cycle_matching_count(6), 18, "matchings of C_6");
  for (int k = 2; k <= 5; ++k)
    c.eq((long long)count_edge_covers(bipartite_cycle(k)), (long long)cycle_matching_count(2 * k),
         "covers of C_" + std::to_string(2 * k) + " vs matchings");

  // Sweep every bipartite shape with p+q <= 6 and every edge set.
  bool saw19 = false, saw37 = false;
  for (int p = 1; p <= 5; ++p)
    for (int q = p; p + q <= 6; ++q) {
      int cells = p * q;
      for (int code = 0; code < (1 << cells); ++code) {
        std::vector<std::pair<int, int>> edges;
        for (int s = 0; s < cells; ++s)
          if (code >> s & 1) edges.emplace_back(s / q, s % q);
        uint64_t covers = count_edge_covers(make_bipartite(p, q, edges));
        if (covers == 19) saw19 = true;
        if (covers == 37) saw37 = true;
      }
    }
  c.ok(!saw19, "found a bipartite graph with exactly 19 edge covers");
  c.ok(!saw37, "found a bipartite graph with exactly 37 edge covers");
}

void suite_realization(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    BipartiteGraph g =
        random_bipartite_with_cover(rng, rand_int(rng, 1, 4), rand_int(rng, 1, 4), 0.5);
    Realization r = realize_configuration(g);
    std::vector<std::vector<char>> adj(g.p, std::vector<char>(g.q, 0));
    for (auto [i, j] : g.edges) adj[i][j] = 1;
    std::vector<std::vector<double>> pts = r.left;
    pts.insert(pts.end(), r.right.begin(), r.right.end());
    FiniteMetricSpace amb = space_from_points(pts, "euclidean", default_tolerance());
    for (int i = 0; i < g.p; ++i)
      for (int j = 0; j < g.q; ++j)
        c.near(amb.d(i, g.p + j), adj[i][j] ? r.r_edge : r.r_nonedge, 1e-9,
               "realized distance (" + std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<int> a(g.p), b(g.q);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), g.p);
    c.near(hausdorff(make_subset_pair(amb, a, b)), r.r_edge, 1e-9,
           "hausdorff distance of the realized pair");
  }
}

void suite_hausdorff_props(Checker& c, std::mt19937_64& rng, int samples) {
  double tau = default_tolerance();
  for (int it = 0; it < samples; ++it) {
    int n = rand_int(rng, 2, 10);
    FiniteMetricSpace amb = random_cloud_space(rng, n, rand_int(rng, 1, 3),
                                               (it % 2) ? "euclidean" : "linf");
    std::vector<int> a = random_subset(rng, n);
    std::vector<int> b = random_subset(rng, n);
    std::vector<int> cc = random_subset(rng, n);
    double dab = hausdorff(amb, a, b);
    double dba = hausdorff(amb, b, a);
    double dac = hausdorff(amb, a, cc);
    double dcb = hausdorff(amb, cc, b);
    c.near(dab, dba, tau, "hausdorff symmetry");
    c.near(hausdorff(amb, a, a), 0.0, 0.0, "hausdorff identity");
    c.le(dab, dac + dcb, 1e-9, "hausdorff triangle inequality");

    std::vector<int> asub = random_subset_of(rng, a, true);
    std::vector<int> bsub = random_subset_of(rng, b, true);
    std::vector<int> au = a, bu = b;
    au.insert(au.end(), bsub.begin(), bsub.end());
    bu.insert(bu.end(), asub.begin(), asub.end());
    c.le(hausdorff(amb, au, bu), dab, tau, "union swap inequality");

    std::vector<int> ac = a;
    std::vector<int> cofb = random_subset_of(rng, b, true);
    ac.insert(ac.end(), cofb.begin(), cofb.end());
    c.le(hausdorff(amb, a, ac), dab, tau, "subset extension inequality");

    std::vector<int> net = random_subset_of(rng, a, false);
    double eps = 0.0;
    for (int i : a) eps = std::max(eps, dist_point_set(amb, i, net));
    c.le(hausdorff(amb, a, net), eps, tau, "eps-net bound");

    int xi = rand_int(rng, 0, n - 1), yi = rand_int(rng, 0, n - 1);
    c.near(hausdorff(amb, {xi}, {yi}), amb.d(xi, yi), tau, "singleton embedding");
  }
}

void suite_cov_pack(Checker& c, std::mt19937_64& rng, int samples) {
  for (int it = 0; it < samples; ++it) {
    FiniteMetricSpace x = (it % 2) ? random_int_space(rng, rand_int(rng, 2, 6))
                                   : random_cloud_space(rng, rand_int(rng, 2, 8), 2, "euclidean");
    std::vector<int> all(x.n);
    std::iota(all.begin(), all.end(), 0);
    double eps = (0.1 + 1.1 * rand_unit(rng)) * diameter(x);
    int cv = cov(x, all, eps);
    int pk = pack(x, all, eps);
    int cv4 = cov(x, all, eps / 4.0);
    c.ok(cv <= pk, "cov <= pack at eps=" + format_double(eps));
    c.ok(pk <= cv4, "pack <= cov(eps/4) at eps=" + format_double(eps));
  }
  int pairs = std::max(1, samples / 4);
  for (int it = 0; it < pairs; ++it) {
    FiniteMetricSpace x = random_int_space(rng, rand_int(rng, 2, 5));
    FiniteMetricSpace y = random_int_space(rng, rand_int(rng, 2, 5));
    double delta = gh_exact(x, y).distance + 0.01;
    std::vector<int> ax(x.n), ay(y.n);
    std::iota(ax.begin(), ax.end(), 0);
    std::iota(ay.begin(), ay.end(), 0);
    double eps = (0.5 + 1.5 * rand_unit(rng)) * std::max(diameter(x), diameter(y));
    c.ok(cov(x, ax, eps) >= cov(y, ay, eps + 2.0 * delta), "cov stability under gh closeness");
    c.ok(pack(x, ax, eps) >= pack(y, ay, 2.0 * eps + 4.0 * delta),
         "pack stability under gh closeness");
  }
}

void suite_steiner(Checker& c, std::mt19937_64& rng, int samples) {
  long long dblfact = 1;
  for (int n = 3; n <= 7; ++n) {
    dblfact *= 2 * n - 5;
    c.eq((long long)enumerate_topologies(n).size(), dblfact,
         "topology count for n=" + std::to_string(n));
  }
  c.eq((long long)enumerate_topologies(2).size(), 1, "topology count for n=2");

  for (int it = 0; it < samples; ++it) {
    int n = rand_int(rng, 2, 10);
    FiniteMetricSpace amb = random_cloud_space(rng, n, 2, "euclidean");
    int msize = rand_int(rng, 1, std::min(4, n));
    std::vector<int> m;
    while ((int)m.size() < msize) {
      int v = rand_int(rng, 0, n - 1);
      if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
    }
    std::sort(m.begin(), m.end());
    SmtResult sup = smt_by_supersets(amb, m);
    NetworkResult net = smt_by_networks(amb, m);
    c.near(net.length, sup.length, 1e-9, "steiner route agreement");
    c.le(sup.length, mst_length(subspace(amb, m)), 1e-9, "smt below terminal mst");
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(bool full, uint64_t seed) {
  struct Entry {
    const char* name;
    double budget_s;  // enforced at full scale only, 0 = none
    std::function<void(Checker&, std::mt19937_64&)> run;
  };
  auto scaled = [&](int full_n, int quick_n) { return full ? full_n : quick_n; };

  std::vector<Entry> entries = {
      {"hexagon-count", 5.0, [&](Checker& c, std::mt19937_64&) { suite_hexagon(c); }},
      {"spectrum-triple", 120.0,
       [&](Checker& c, std::mt19937_64& g) { suite_spectrum(c, g, scaled(200, 40)); }},
      {"simplex-formulas", 180.0,
       [&](Checker& c, std::mt19937_64& g) { suite_simplex(c, g, scaled(100, 20)); }},
      {"closed-forms", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_closed_forms(c, g, scaled(500, 100)); }},
      {"gh-metric-axioms", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_axioms(c, g, scaled(100, 20)); }},
      {"geodesic", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_geodesic(c, g, scaled(50, 10)); }},
      {"borsuk", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_borsuk(c, g, scaled(100, 20)); }},
      {"graph-numbers", 0.0, [&](Checker& c, std::mt19937_64&) { suite_graph_numbers(c); }},
      {"edge-covers", 60.0, [&](Checker& c, std::mt19937_64&) { suite_edge_covers(c); }},
      {"realization", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_realization(c, g, scaled(20, 8)); }},
      {"hausdorff-properties", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_hausdorff_props(c, g, scaled(500, 100)); }},
      {"cov-pack", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_cov_pack(c, g, scaled(200, 40)); }},
      {"steiner-routes", 0.0,
       [&](Checker& c, std::mt19937_64& g) { suite_steiner(c, g, scaled(50, 10)); }},
  };

  std::vector<SuiteResult> out;
  for (size_t i = 0; i < entries.size(); ++i) {
    Checker c;
    c.r.name = entries[i].name;
    std::mt19937_64 rng(seed * 1000003ull + i);
    auto t0 = std::chrono::steady_clock::now();
    try {
      entries[i].run(c, rng);
    } catch (const std::exception& e) {
      c.fail_with(std::string("exception: ") + e.what());
    }
    c.r.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (full && entries[i].budget_s > 0.0 && c.r.elapsed_s > entries[i].budget_s)
      c.fail_with("runtime budget exceeded: " + format_double(c.r.elapsed_s) + " s > " +
                  format_double(entries[i].budget_s) + " s");
    out.push_back(std::move(c.r));
  }
  return out;
}

}  // namespace msgeo
