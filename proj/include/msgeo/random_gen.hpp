#pragma once

#include <random>
#include <string>

#include "msgeo/graphs.hpp"
#include "msgeo/metric_space.hpp"

namespace msgeo {

// Draws reduced modulo the range / scaled from the top 53 bits, so the same
// seed reproduces the same stream on any platform.
int rand_int(std::mt19937_64& rng, int lo, int hi);
double rand_unit(std::mt19937_64& rng);

// Integer distance table in 1..9, rejection-sampled until the triangle
// inequality holds; practical up to n = 6.
FiniteMetricSpace random_int_space(std::mt19937_64& rng, int n);

// Uniform points in the unit cube under the given metric name.
FiniteMetricSpace random_cloud_space(std::mt19937_64& rng, int n, int dim,
                                     const std::string& metric);

SimpleGraph random_graph(std::mt19937_64& rng, int n, double edge_prob);

// Random bipartite graph patched so that every vertex has degree >= 1.
BipartiteGraph random_bipartite_with_cover(std::mt19937_64& rng, int p, int q,
                                           double edge_prob);

}  // namespace msgeo
