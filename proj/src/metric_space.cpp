#include "msgeo/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace msgeo {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

FiniteMetricSpace validate_space(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<double>>& table,
                                 double tol) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail("NonSquare", "empty distance table");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail("NonSquare", "label count " + std::to_string(labels.size()) +
                          " does not match table size " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(table[i].size()) != n)
      fail("NonSquare", "row " + std::to_string(i) + " has " +
                            std::to_string(table[i].size()) + " entries, expected " +
                            std::to_string(n));

  FiniteMetricSpace x;
  x.n = n;
  x.labels = labels.empty() ? default_labels(n) : labels;
  {
    std::set<std::string> seen;
    for (const auto& l : x.labels)
      if (!seen.insert(l).second) fail("DuplicateLabel", "duplicate label \"" + l + "\"");
  }
  x.dist.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = table[i][j];
      if (!std::isfinite(v) || v < -tol) {
        if (std::isfinite(v))
          fail("NegativeAt", "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] = " + format_double(v));
        fail("NegativeAt", "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                               "] is not finite");
      }
      x.at(i, j) = std::max(v, 0.0);
    }
  for (int i = 0; i < n; ++i)
    if (x.d(i, i) > tol)
      fail("NonzeroDiagonal", "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                                  "] = " + format_double(x.d(i, i)));
    else
      x.at(i, i) = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(x.d(i, j) - x.d(j, i)) > tol)
        fail("AsymmetricAt", "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] = " + format_double(x.d(i, j)) + " but dist[" +
                                 std::to_string(j) + "][" + std::to_string(i) + "] = " +
                                 format_double(x.d(j, i)));
      x.at(j, i) = x.d(i, j);  // keep the table exactly symmetric
      if (x.d(i, j) <= tol)
        fail("ZeroOffDiagonal",
             "dist[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                 format_double(x.d(i, j)));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (x.d(i, k) > x.d(i, j) + x.d(j, k) + tol)
          fail("TriangleViolation", "dist[" + std::to_string(i) + "][" +
                                        std::to_string(k) + "] > dist[" +
                                        std::to_string(i) + "][" + std::to_string(j) +
                                        "] + dist[" + std::to_string(j) + "][" +
                                        std::to_string(k) + "]");
  return x;
}

FiniteMetricSpace simplex(int m, double lambda) {
  if (m < 1) fail("InvalidParams", "simplex needs m >= 1, got " + std::to_string(m));
  if (m >= 2 && lambda <= 0.0)
    fail("InvalidParams", "simplex with m >= 2 needs lambda > 0, got " + format_double(lambda));
  FiniteMetricSpace x;
  x.n = m;
  x.labels = default_labels(m);
  x.dist.assign(static_cast<size_t>(m) * m, lambda);
  for (int i = 0; i < m; ++i) x.at(i, i) = 0.0;
  return x;
}

FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda) {
  if (lambda < 0.0) fail("InvalidParams", "scale needs lambda >= 0");
  if (lambda == 0.0) {
    FiniteMetricSpace one;
    one.n = 1;
    one.labels = {x.labels.empty() ? std::string("p0") : x.labels[0]};
    one.dist = {0.0};
    return one;
  }
  FiniteMetricSpace y = x;
  for (double& v : y.dist) v *= lambda;
  return y;
}

double diameter(const FiniteMetricSpace& x) {
  double best = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) best = std::max(best, x.d(i, j));
  return best;
}

double eps_min(const FiniteMetricSpace& x) {
  if (x.n < 2) fail("SingletonSpace", "eps_min needs at least 2 points");
  double best = x.d(0, 1);
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) best = std::min(best, x.d(i, j));
  return best;
}

FiniteMetricSpace subspace(const FiniteMetricSpace& x, const std::vector<int>& idx) {
  FiniteMetricSpace y;
  y.n = static_cast<int>(idx.size());
  y.dist.resize(static_cast<size_t>(y.n) * y.n);
  y.labels.reserve(y.n);
  for (int i : idx) {
    if (i < 0 || i >= x.n) fail("IndexOutOfRange", "point index " + std::to_string(i));
    y.labels.push_back(x.labels[i]);
  }
  for (int a = 0; a < y.n; ++a)
    for (int b = 0; b < y.n; ++b) y.at(a, b) = x.d(idx[a], idx[b]);
  return y;
}

FiniteMetricSpace space_from_points(const std::vector<std::vector<double>>& points,
                                    const std::string& metric, double tol) {
  if (metric != "euclidean" && metric != "linf")
    fail("ParseError", "unknown point-cloud metric \"" + metric + "\"");
  const int n = static_cast<int>(points.size());
  if (n == 0) fail("NonSquare", "empty point cloud");
  const size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) fail("ParseError", "point dimensions differ");
  const bool linf = metric == "linf";
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.0;
      if (linf) {
        for (size_t k = 0; k < dim; ++k)
          v = std::max(v, std::fabs(points[i][k] - points[j][k]));
      } else {
        for (size_t k = 0; k < dim; ++k) {
          double t = points[i][k] - points[j][k];
          v += t * t;
        }
        v = std::sqrt(v);
      }
      table[i][j] = table[j][i] = v;
    }
  return validate_space(default_labels(n), table, tol);
}

}  // namespace msgeo
