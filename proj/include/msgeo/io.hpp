#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msgeo/graphs.hpp"
#include "msgeo/metric_space.hpp"

namespace msgeo {

// File loaders. A space file either carries an explicit distance matrix
//   {"labels": [...], "matrix": [[...], ...]}     (labels optional)
// or a point cloud
//   {"metric": "euclidean" | "linf", "points": [[...], ...]}.
FiniteMetricSpace load_space(const std::string& path, double tol);

// {"n": int, "edges": [[u, v], ...]}
SimpleGraph load_graph(const std::string& path);

// {"p": int, "q": int, "edges": [[i, j], ...]}
BipartiteGraph load_bipartite(const std::string& path);

// {"pairs": [[i, j], ...]}
std::vector<std::pair<int, int>> load_pairs(const std::string& path);

// JSON string literal with escaping, including the quotes.
std::string json_quote(const std::string& s);

// Deterministic writers (12 significant digits, no whitespace variance).
std::string json_doubles(const std::vector<double>& v);
std::string json_ints(const std::vector<int>& v);
std::string space_to_json(const FiniteMetricSpace& x);

}  // namespace msgeo
