#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kEdgeCoverGuard = 24;
inline constexpr int kMatchingGuard = 90;

// Undirected simple graph on vertices {0..n-1}.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized first < second, sorted, unique
};

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges);
SimpleGraph complement(const SimpleGraph& g);
std::vector<std::vector<char>> adjacency(const SimpleGraph& g);

// Bipartite graph with parts {0..p-1} and {0..q-1}; edges are (left, right).
struct BipartiteGraph {
  int p = 0;
  int q = 0;
  std::vector<std::pair<int, int>> edges;
};

BipartiteGraph make_bipartite(int p, int q, std::vector<std::pair<int, int>> edges);

// Two-distance space on the vertices: adjacent pairs at distance a,
// non-adjacent pairs at distance b. Requires 0 < a <= b <= 2a.
FiniteMetricSpace graph_space(const SimpleGraph& g, double a, double b);

// Whether the space splits into m parts of strictly smaller diameter,
// by exhaustive partition search.
bool borsuk_partitionable(const FiniteMetricSpace& x, int m, double tol);

// Same question decided through the simplex distance formula.
bool borsuk_by_gh(const FiniteMetricSpace& x, int m, double lambda, double tol);

// Minimum number of cliques covering the vertices, two ways.
int clique_cover_brute(const SimpleGraph& g);
int clique_cover_by_gh(const SimpleGraph& g, double a, double b);

// Chromatic number, two ways.
int chromatic_brute(const SimpleGraph& g);
int chromatic_by_gh(const SimpleGraph& g, double a, double b);

// Combined operations: compute through the simplex-distance scan, check the
// answer against the brute-force search, and return it.
int clique_cover_number(const SimpleGraph& g, double a, double b);
int chromatic_number(const SimpleGraph& g, double a, double b);

// Number of edge covers (subsets of edges touching every vertex).
uint64_t count_edge_covers(const BipartiteGraph& g);
uint64_t count_edge_covers_serial(const BipartiteGraph& g);
uint64_t count_edge_covers(const SimpleGraph& g);

// Number of matchings (including the empty one) of the cycle C_m, m >= 3.
uint64_t cycle_matching_count(int m);

// Euclidean realization of a bipartite adjacency structure: left part to
// standard basis vectors, right part to shifted scaled basis vectors, so
// that edges have length sqrt(N-1) and non-edges sqrt(N+1).
struct Realization {
  int p = 0;
  int q = 0;
  int dim = 0;
  int big_n = 0;  // N = 1 + max right-degree
  std::vector<std::vector<double>> left;
  std::vector<std::vector<double>> right;
  double r_edge = 0.0;     // sqrt(N-1)
  double r_nonedge = 0.0;  // sqrt(N+1)
};

Realization realize_configuration(const BipartiteGraph& g);

}  // namespace msgeo
