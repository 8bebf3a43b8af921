#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msgeo/covering.hpp"
#include "msgeo/graphs.hpp"
#include "msgeo/gromov_hausdorff.hpp"
#include "msgeo/hausdorff.hpp"
#include "msgeo/io.hpp"
#include "msgeo/metric_space.hpp"
#include "msgeo/mst.hpp"
#include "msgeo/selftest.hpp"
#include "msgeo/steiner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace msgeo;

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    size_t end = comma == std::string::npos ? s.size() : comma;
    std::string tok = s.substr(start, end - start);
    if (tok.empty()) fail("UsageError", "empty entry in index list '" + s + "'");
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (...) {
      fail("UsageError", "bad index list entry '" + tok + "'");
    }
    if (pos != tok.size()) fail("UsageError", "bad index list entry '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) fail("UsageError", "empty index list");
  return out;
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  std::string out = "[";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(pairs[i].first) + ',' + std::to_string(pairs[i].second) + ']';
  }
  return out + "]";
}

std::string edges_json(const std::vector<std::tuple<int, int, double>>& edges) {
  std::string out = "[";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    auto [a, b, len] = edges[i];
    out += '[' + std::to_string(a) + ',' + std::to_string(b) + ',' + format_double(len) + ']';
  }
  return out + "]";
}

void emit(const std::string& doc) { std::cout << doc << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff and Gromov-Hausdorff distances on finite metric spaces"};
  app.require_subcommand(1);
  int exit_code = 0;

  // validate
  std::string v_file;
  auto* c_validate = app.add_subcommand("validate", "Check a space file against the metric axioms");
  c_validate->add_option("file", v_file, "space JSON file")->required();
  c_validate->callback([&] {
    FiniteMetricSpace x = load_space(v_file, default_tolerance());
    emit("{\"valid\":true,\"n\":" + std::to_string(x.n) +
         ",\"diameter\":" + format_double(diameter(x)) + "}");
  });

  // hausdorff
  std::string h_space, h_a, h_b;
  auto* c_hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance between two subsets");
  c_hausdorff->add_option("--space", h_space)->required();
  c_hausdorff->add_option("--a", h_a, "comma-separated indices")->required();
  c_hausdorff->add_option("--b", h_b, "comma-separated indices")->required();
  c_hausdorff->callback([&] {
    FiniteMetricSpace x = load_space(h_space, default_tolerance());
    SubsetPair pair = make_subset_pair(x, parse_indices(h_a), parse_indices(h_b));
    emit("{\"value\":" + format_double(hausdorff(pair)) + "}");
  });

  // count-sposition
  std::string cs_space, cs_a, cs_b, cs_cand;
  double cs_s = 0.0;
  auto* c_count = app.add_subcommand("count-sposition", "Count candidate subsets in s-position");
  c_count->add_option("--space", cs_space)->required();
  c_count->add_option("--a", cs_a)->required();
  c_count->add_option("--b", cs_b)->required();
  c_count->add_option("--s", cs_s)->required();
  auto* cs_cand_opt = c_count->add_option("--candidates", cs_cand, "defaults to cs_set");
  c_count->callback([&] {
    FiniteMetricSpace x = load_space(cs_space, default_tolerance());
    SubsetPair pair = make_subset_pair(x, parse_indices(cs_a), parse_indices(cs_b));
    std::vector<int> cand =
        cs_cand_opt->count() ? parse_indices(cs_cand) : cs_set(pair, cs_s);
    emit("{\"count\":" + std::to_string(count_s_position_sets(pair, cand, cs_s)) + "}");
  });

  // gh
  std::string g_x, g_y;
  bool g_witness = false;
  auto* c_gh = app.add_subcommand("gh", "Exact Gromov-Hausdorff distance");
  c_gh->add_option("--x", g_x)->required();
  c_gh->add_option("--y", g_y)->required();
  c_gh->add_flag("--witness", g_witness, "include an optimal correspondence");
  c_gh->callback([&] {
    GHResult res = gh_exact(load_space(g_x, default_tolerance()),
                            load_space(g_y, default_tolerance()));
    std::string doc = "{\"distance\":" + format_double(res.distance);
    if (g_witness) doc += ",\"witness\":" + pairs_json(res.witness.pairs);
    emit(doc + "}");
  });

  // gh-simplex
  std::string gs_x;
  int gs_m = 0;
  double gs_lambda = 0.0;
  auto* c_ghs = app.add_subcommand("gh-simplex", "Distance to the simplex lambda*Delta_m");
  c_ghs->add_option("--x", gs_x)->required();
  c_ghs->add_option("--m", gs_m)->required();
  c_ghs->add_option("--lambda", gs_lambda)->required();
  c_ghs->callback([&] {
    FiniteMetricSpace x = load_space(gs_x, default_tolerance());
    emit("{\"distance\":" + format_double(gh_to_simplex(x, gs_m, gs_lambda)) + "}");
  });

  // interpolate
  std::string i_x, i_y, i_corr;
  double i_t = 0.0;
  auto* c_interp = app.add_subcommand("interpolate", "Geodesic point R_t between two spaces");
  c_interp->add_option("--x", i_x)->required();
  c_interp->add_option("--y", i_y)->required();
  c_interp->add_option("--t", i_t)->required();
  auto* i_corr_opt = c_interp->add_option("--corr", i_corr, "defaults to an optimal witness");
  c_interp->callback([&] {
    FiniteMetricSpace x = load_space(i_x, default_tolerance());
    FiniteMetricSpace y = load_space(i_y, default_tolerance());
    Correspondence corr;
    if (i_corr_opt->count()) {
      corr.left_size = x.n;
      corr.right_size = y.n;
      corr.pairs = load_pairs(i_corr);
      validate_correspondence(corr);
    } else {
      corr = gh_exact(x, y).witness;
    }
    emit(space_to_json(interpolate(x, y, corr, i_t)));
  });

  // mst
  std::string m_space;
  auto* c_mst = app.add_subcommand("mst", "Minimum spanning tree of the full space");
  c_mst->add_option("--space", m_space)->required();
  c_mst->callback([&] {
    Tree t = mst(load_space(m_space, default_tolerance()));
    emit("{\"length\":" + format_double(t.length()) + ",\"edges\":" + edges_json(t.edges) +
         "}");
  });

  // mst-spectrum
  std::string ms_space, ms_method = "edges";
  double ms_lambda = 0.0;
  auto* c_spec = app.add_subcommand("mst-spectrum", "The mst-spectrum via one of three routes");
  c_spec->add_option("--space", ms_space)->required();
  c_spec->add_option("--method", ms_method, "edges | partitions | gh");
  auto* ms_lambda_opt = c_spec->add_option("--lambda", ms_lambda, "required for --method gh");
  c_spec->callback([&] {
    FiniteMetricSpace x = load_space(ms_space, default_tolerance());
    if (ms_method == "edges") {
      emit("{\"spectrum\":" + json_doubles(mst_spectrum(x)) + "}");
    } else if (ms_method == "partitions") {
      emit("{\"spectrum\":" + json_doubles(mst_spectrum_by_partitions(x)) + "}");
    } else if (ms_method == "gh") {
      if (!ms_lambda_opt->count()) fail("UsageError", "--method gh needs --lambda");
      SpectrumGH s = mst_spectrum_by_gh(x, ms_lambda);
      emit("{\"spectrum\":" + json_doubles(s.spectrum) +
           ",\"mst_length\":" + format_double(s.mst_length) + "}");
    } else {
      fail("UsageError", "unknown method '" + ms_method + "'");
    }
  });

  // steiner
  std::string st_space, st_m, st_method = "supersets";
  auto* c_st = app.add_subcommand("steiner", "Steiner minimal tree over a terminal set");
  c_st->add_option("--space", st_space)->required();
  c_st->add_option("--m", st_m, "terminal indices")->required();
  c_st->add_option("--method", st_method, "supersets | networks");
  c_st->callback([&] {
    FiniteMetricSpace x = load_space(st_space, default_tolerance());
    std::vector<int> m = parse_indices(st_m);
    if (st_method == "supersets") {
      SmtResult r = smt_by_supersets(x, m);
      emit("{\"length\":" + format_double(r.length) + ",\"vertices\":" + json_ints(r.vertices) +
           "}");
    } else if (st_method == "networks") {
      NetworkResult r = smt_by_networks(x, m);
      emit("{\"length\":" + format_double(r.length) + ",\"topology\":" +
           std::to_string(r.topology) + ",\"interior\":" + json_ints(r.interior) +
           ",\"edges\":" + edges_json(r.edges) + "}");
    } else {
      fail("UsageError", "unknown method '" + st_method + "'");
    }
  });

  // borsuk
  std::string b_space;
  int b_m = 0;
  double b_lambda = 0.0;
  auto* c_borsuk = app.add_subcommand("borsuk", "Partition into m parts of smaller diameter?");
  c_borsuk->add_option("--space", b_space)->required();
  c_borsuk->add_option("--m", b_m)->required();
  auto* b_lambda_opt = c_borsuk->add_option("--lambda", b_lambda, "defaults to diameter/2");
  c_borsuk->callback([&] {
    FiniteMetricSpace x = load_space(b_space, default_tolerance());
    double tol = default_tolerance();
    double lambda = b_lambda_opt->count() ? b_lambda : diameter(x) / 2.0;
    bool brute = borsuk_partitionable(x, b_m, tol);
    bool viagh = borsuk_by_gh(x, b_m, lambda, tol);
    if (brute != viagh)
      fail("InternalError", "simplex-distance route disagrees with the partition search");
    emit("{\"partitionable\":" + json_bool(brute) + "}");
  });

  // clique-cover / chromatic
  std::string q_graph;
  double q_a = 1.0, q_b = 2.0;
  auto* c_clique = app.add_subcommand("clique-cover", "Clique cover number via simplex distances");
  c_clique->add_option("--graph", q_graph)->required();
  c_clique->add_option("--a", q_a, "adjacent distance (default 1)");
  c_clique->add_option("--b", q_b, "non-adjacent distance (default 2)");
  c_clique->callback([&] {
    emit("{\"value\":" + std::to_string(clique_cover_number(load_graph(q_graph), q_a, q_b)) +
         "}");
  });
  std::string ch_graph;
  double ch_a = 1.0, ch_b = 2.0;
  auto* c_chrom = app.add_subcommand("chromatic", "Chromatic number via simplex distances");
  c_chrom->add_option("--graph", ch_graph)->required();
  c_chrom->add_option("--a", ch_a, "adjacent distance (default 1)");
  c_chrom->add_option("--b", ch_b, "non-adjacent distance (default 2)");
  c_chrom->callback([&] {
    emit("{\"value\":" + std::to_string(chromatic_number(load_graph(ch_graph), ch_a, ch_b)) +
         "}");
  });

  // edge-covers
  std::string e_file;
  auto* c_covers = app.add_subcommand("edge-covers", "Count edge covers of a bipartite graph");
  c_covers->add_option("--bipartite", e_file)->required();
  c_covers->callback([&] {
    emit("{\"count\":" + std::to_string(count_edge_covers(load_bipartite(e_file))) + "}");
  });

  // realize-config
  std::string r_file;
  auto* c_realize = app.add_subcommand("realize-config", "Euclidean configuration realization");
  c_realize->add_option("--bipartite", r_file)->required();
  c_realize->callback([&] {
    Realization r = realize_configuration(load_bipartite(r_file));
    std::string pts = "[";
    for (int i = 0; i < r.p + r.q; ++i) {
      if (i) pts += ',';
      pts += json_doubles(i < r.p ? r.left[i] : r.right[i - r.p]);
    }
    pts += ']';
    emit("{\"metric\":\"euclidean\",\"p\":" + std::to_string(r.p) + ",\"q\":" +
         std::to_string(r.q) + ",\"N\":" + std::to_string(r.big_n) + ",\"r_edge\":" +
         format_double(r.r_edge) + ",\"r_nonedge\":" + format_double(r.r_nonedge) +
         ",\"points\":" + pts + "}");
  });

  // selftest
  std::string t_scale = "quick";
  uint64_t t_seed = 0;
  int t_jobs = 0;
  auto* c_self = app.add_subcommand("selftest", "Run the oracle-equivalence suites");
  c_self->add_option("scale", t_scale, "quick | full");
  c_self->add_option("--seed", t_seed, "seed for the randomized suites (default 0)");
  c_self->add_option("--jobs", t_jobs, "cap worker threads");
  c_self->callback([&] {
    if (t_scale != "quick" && t_scale != "full")
      fail("UsageError", "unknown scale '" + t_scale + "', expected quick or full");
#ifdef _OPENMP
    if (t_jobs > 0) omp_set_num_threads(t_jobs);
#endif
    auto suites = run_selftest(t_scale == "full", t_seed);
    bool all = true;
    std::string doc = "{\"scale\":\"" + t_scale + "\",\"seed\":" + std::to_string(t_seed) +
                      ",\"suites\":[";
    for (size_t i = 0; i < suites.size(); ++i) {
      const auto& s = suites[i];
      all = all && s.pass;
      if (i) doc += ',';
      doc += "{\"name\":" + json_quote(s.name) + ",\"pass\":" + json_bool(s.pass) +
             ",\"checks\":" + std::to_string(s.checks) +
             ",\"max_dev\":" + format_double(s.max_dev) +
             ",\"elapsed_s\":" + format_double(s.elapsed_s) +
             ",\"detail\":" + json_quote(s.detail) + "}";
    }
    doc += "],\"pass\":" + json_bool(all) + "}";
    emit(doc);
    if (!all) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const msgeo::Error& e) {
    std::cerr << "{\"error\":" << json_quote(e.code()) << ",\"detail\":" << json_quote(e.what())
              << "}\n";
    return e.code() == "UsageError" ? 2 : 1;
  }
  return exit_code;
}
