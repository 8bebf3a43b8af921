#include "msgeo/hausdorff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace msgeo {

static std::vector<int> checked_indices(const FiniteMetricSpace& x, std::vector<int> s,
                                        const char* what) {
  if (s.empty()) fail("EmptySet", std::string(what) + " must be non-empty");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < 0 || i >= x.n)
      fail("IndexOutOfRange", std::string(what) + " index " + std::to_string(i));
  return s;
}

SubsetPair make_subset_pair(FiniteMetricSpace ambient, std::vector<int> a,
                            std::vector<int> b) {
  SubsetPair p;
  p.a = checked_indices(ambient, std::move(a), "A");
  p.b = checked_indices(ambient, std::move(b), "B");
  p.ambient = std::move(ambient);
  return p;
}

double dist_point_set(const FiniteMetricSpace& x, int i, const std::vector<int>& s) {
  if (s.empty()) fail("EmptySet", "dist_point_set needs a non-empty set");
  double best = x.d(i, s[0]);
  for (size_t k = 1; k < s.size(); ++k) best = std::min(best, x.d(i, s[k]));
  return best;
}

double hausdorff(const FiniteMetricSpace& ambient, const std::vector<int>& a,
                 const std::vector<int>& b) {
  double r = 0.0;
  for (int i : a) r = std::max(r, dist_point_set(ambient, i, b));
  for (int j : b) r = std::max(r, dist_point_set(ambient, j, a));
  return r;
}

double hausdorff(const SubsetPair& pair) { return hausdorff(pair.ambient, pair.a, pair.b); }

std::vector<int> cs_set(const SubsetPair& pair, double s, double tol) {
  double r = hausdorff(pair);
  if (s < -tol || s > r + tol)
    fail("SOutOfRange", "s = " + format_double(s) + " outside [0, r], r = " + format_double(r));
  std::vector<int> out;
  for (int i = 0; i < pair.ambient.n; ++i)
    if (dist_point_set(pair.ambient, i, pair.a) <= s + tol &&
        dist_point_set(pair.ambient, i, pair.b) <= r - s + tol)
      out.push_back(i);
  return out;
}

bool is_s_position(const SubsetPair& pair, const std::vector<int>& c, double s,
                   double tol) {
  if (c.empty()) fail("EmptyC", "is_s_position needs a non-empty C");
  double r = hausdorff(pair);
  if (s < -tol || s > r + tol)
    fail("SOutOfRange", "s = " + format_double(s) + " outside [0, r], r = " + format_double(r));
  double dac = hausdorff(pair.ambient, pair.a, c);
  if (std::fabs(dac - s) > tol) return false;
  double dcb = hausdorff(pair.ambient, c, pair.b);
  return std::fabs(dcb - (r - s)) <= tol;
}

namespace {

// Flattened data for the subset scan: per-candidate distances to A and B, and
// per-(anchor, candidate) distance rows for the directed sup-inf terms.
struct CountContext {
  int nc = 0;
  double r = 0.0, s = 0.0, tol = 0.0;
  std::vector<double> cand_to_a, cand_to_b;  // size nc
  std::vector<double> row_a, row_b;          // |A| x nc and |B| x nc
  int na = 0, nb = 0;

  bool in_position(uint32_t mask) const {
    double da = 0.0;  // sup over c in C of |cA|
    for (uint32_t m = mask; m; m &= m - 1) {
      int c = std::countr_zero(m);
      da = std::max(da, cand_to_a[c]);
      if (da > s + tol) return false;
    }
    for (int i = 0; i < na; ++i) {  // sup over a of |aC|
      const double* row = row_a.data() + static_cast<size_t>(i) * nc;
      double best = std::numeric_limits<double>::infinity();
      for (uint32_t m = mask; m; m &= m - 1) best = std::min(best, row[std::countr_zero(m)]);
      da = std::max(da, best);
      if (da > s + tol) return false;
    }
    if (std::fabs(da - s) > tol) return false;
    double db = 0.0;
    for (uint32_t m = mask; m; m &= m - 1) {
      int c = std::countr_zero(m);
      db = std::max(db, cand_to_b[c]);
      if (db > r - s + tol) return false;
    }
    for (int j = 0; j < nb; ++j) {
      const double* row = row_b.data() + static_cast<size_t>(j) * nc;
      double best = std::numeric_limits<double>::infinity();
      for (uint32_t m = mask; m; m &= m - 1) best = std::min(best, row[std::countr_zero(m)]);
      db = std::max(db, best);
      if (db > r - s + tol) return false;
    }
    return std::fabs(db - (r - s)) <= tol;
  }
};

CountContext make_context(const SubsetPair& pair, std::vector<int> candidates, double s,
                          double tol) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (static_cast<int>(candidates.size()) > kSPositionGuard)
    fail("TooLarge", "candidate set guarded at " + std::to_string(kSPositionGuard) +
                         " points, got " + std::to_string(candidates.size()));
  for (int i : candidates)
    if (i < 0 || i >= pair.ambient.n)
      fail("IndexOutOfRange", "candidate index " + std::to_string(i));
  CountContext ctx;
  ctx.r = hausdorff(pair);
  if (s < -tol || s > ctx.r + tol)
    fail("SOutOfRange", "s = " + format_double(s) + " outside [0, r], r = " + format_double(ctx.r));
  ctx.s = s;
  ctx.tol = tol;
  ctx.nc = static_cast<int>(candidates.size());
  ctx.na = static_cast<int>(pair.a.size());
  ctx.nb = static_cast<int>(pair.b.size());
  ctx.cand_to_a.resize(ctx.nc);
  ctx.cand_to_b.resize(ctx.nc);
  for (int c = 0; c < ctx.nc; ++c) {
    ctx.cand_to_a[c] = dist_point_set(pair.ambient, candidates[c], pair.a);
    ctx.cand_to_b[c] = dist_point_set(pair.ambient, candidates[c], pair.b);
  }
  ctx.row_a.resize(static_cast<size_t>(ctx.na) * ctx.nc);
  ctx.row_b.resize(static_cast<size_t>(ctx.nb) * ctx.nc);
  for (int i = 0; i < ctx.na; ++i)
    for (int c = 0; c < ctx.nc; ++c)
      ctx.row_a[static_cast<size_t>(i) * ctx.nc + c] = pair.ambient.d(pair.a[i], candidates[c]);
  for (int j = 0; j < ctx.nb; ++j)
    for (int c = 0; c < ctx.nc; ++c)
      ctx.row_b[static_cast<size_t>(j) * ctx.nc + c] = pair.ambient.d(pair.b[j], candidates[c]);
  return ctx;
}

}  // namespace

long long count_s_position_sets(const SubsetPair& pair, const std::vector<int>& candidates,
                                double s, double tol) {
  if (candidates.empty()) return 0;
  CountContext ctx = make_context(pair, candidates, s, tol);
  const int64_t total = int64_t{1} << ctx.nc;
  long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
  for (int64_t mask = 1; mask < total; ++mask)
    if (ctx.in_position(static_cast<uint32_t>(mask))) ++count;
  return count;
}

long long count_s_position_sets_serial(const SubsetPair& pair,
                                       const std::vector<int>& candidates, double s,
                                       double tol) {
  if (candidates.empty()) return 0;
  CountContext ctx = make_context(pair, candidates, s, tol);
  const int64_t total = int64_t{1} << ctx.nc;
  long long count = 0;
  for (int64_t mask = 1; mask < total; ++mask)
    if (ctx.in_position(static_cast<uint32_t>(mask))) ++count;
  return count;
}

}  // namespace msgeo
