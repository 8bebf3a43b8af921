#pragma once

#include <tuple>
#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kSmtAmbientGuard = 16;
inline constexpr int kNetworkBoundaryGuard = 7;

/// A model full Steiner tree on vertices {0..2n-3}: boundary {0..n-1} of
// degree 1, interior {n..2n-3} of degree 3.
struct SteinerTopology {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, first < second
};

// One representative per boundary-fixing isomorphism class; count is
// (2n-5)!! for n >= 3, one single-edge topology for n = 2.
std::vector<SteinerTopology> enumerate_topologies(int n);

struct SmtResult {
  double length = 0.0;
  std::vector<int> vertices;  // lexicographically first minimizing V
};

// smt(M) = min over M subseteq V subseteq ambient of mst_length(V);
// exhaustive over supersets.
SmtResult smt_by_supersets(const FiniteMetricSpace& ambient, const std::vector<int>& m);
SmtResult smt_by_supersets_serial(const FiniteMetricSpace& ambient,
                                  const std::vector<int>& m);

struct NetworkResult {
  double length = 0.0;
  int topology = 0;                                // index into enumerate_topologies(#M)
  std::vector<int> interior;                       // ambient index per interior vertex
  std::vector<std::tuple<int, int, double>> edges;  // placed edges (ambient indices)
};

// Minimum over all full-Steiner-tree topologies and all placements of the
// interior vertices at ambient points (placements may coincide with anything).
NetworkResult smt_by_networks(const FiniteMetricSpace& ambient, const std::vector<int>& m);
NetworkResult smt_by_networks_serial(const FiniteMetricSpace& ambient,
                                     const std::vector<int>& m);

}  // namespace msgeo
