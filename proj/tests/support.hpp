#pragma once

// Helpers and independent oracles shared by the test binaries. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nondeg/geometry.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/rational.hpp"
#include "nondeg/rng.hpp"
#include "nondeg/setsystem.hpp"

namespace testing {

using nondeg::BipartiteIncidenceGraph;
using nondeg::Index;
using nondeg::Rational;
using nondeg::RationalPoint;

inline Rational Q(const char* s) { return nondeg::parse_rational(s); }

inline RationalPoint P(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return RationalPoint(std::move(c));
}

inline Rational sqdist(const RationalPoint& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rational t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

// Solves A x = b by fraction Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Center and squared radius of the sphere through d+1 points, via the
// (d+1)x(d+1) system |x|^2 = 2 c.x + k with k = r^2 - |c|^2.
inline std::optional<std::pair<RationalPoint, Rational>> oracle_circumsphere(
    const std::vector<RationalPoint>& pts) {
  const std::size_t d = pts[0].dim();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& p : pts) {
    std::vector<Rational> row;
    Rational norm = 0;
    for (std::size_t i = 0; i < d; ++i) {
      row.push_back(2 * p[i]);
      norm += p[i] * p[i];
    }
    row.emplace_back(1);
    a.push_back(row);
    b.push_back(norm);
  }
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Rational> c(x->begin(), x->begin() + d);
  Rational cc = 0;
  for (const auto& v : c) cc += v * v;
  Rational r2 = (*x)[d] + cc;
  if (r2 <= 0) return std::nullopt;
  return std::make_pair(RationalPoint(std::move(c)), r2);
}

// Rank of a list of rational vectors.
inline int oracle_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline int oracle_affine_rank(const std::vector<RationalPoint>& pts) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r;
    for (std::size_t k = 0; k < pts[0].dim(); ++k) r.push_back(pts[i][k] - pts[0][k]);
    rows.push_back(r);
  }
  return oracle_rank(rows);
}

// Calls fn(mask) for every k-subset of [0, n) given as a bitmask.
template <typename Fn>
void each_subset_mask(int n, int k, Fn fn) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) == k) fn(mask);
  }
}

inline std::uint64_t set_mask(const std::vector<Index>& s) {
  std::uint64_t m = 0;
  for (Index i : s) m |= std::uint64_t{1} << i;
  return m;
}

// Exhaustive shattering check over every subset of the ground set.
inline int oracle_vc(const nondeg::SetSystem& f) {
  if (f.size() == 0) return -1;
  const int g = static_cast<int>(f.ground_size());
  int best = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g); ++b) {
    std::set<std::uint64_t> traces;
    for (const auto& s : f.sets()) traces.insert(set_mask(s) & b);
    const int k = __builtin_popcountll(b);
    if (traces.size() == (std::size_t{1} << k)) best = std::max(best, k);
  }
  return best;
}

inline std::uint64_t oracle_shatter(const nondeg::SetSystem& f, int z) {
  std::uint64_t best = 0;
  each_subset_mask(static_cast<int>(f.ground_size()), z, [&](std::uint64_t b) {
    std::set<std::uint64_t> traces;
    for (const auto& s : f.sets()) traces.insert(set_mask(s) & b);
    best = std::max<std::uint64_t>(best, traces.size());
  });
  return best;
}

// Pascal-triangle binomial sum.
inline std::uint64_t oracle_envelope(int d, int z) {
  std::vector<std::vector<std::uint64_t>> c(z + 1, std::vector<std::uint64_t>(z + 1, 0));
  for (int i = 0; i <= z; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  std::uint64_t s = 0;
  for (int i = 0; i <= std::min(d, z); ++i) s += c[z][i];
  return s;
}

inline nondeg::SetSystem random_system(nondeg::Rng& rng, std::size_t ground, std::size_t count,
                                       std::uint64_t density_percent) {
  std::vector<std::vector<Index>> sets;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Index> s;
    for (Index e = 0; e < ground; ++e) {
      if (rng.uniform_below(100) < density_percent) s.push_back(e);
    }
    sets.push_back(std::move(s));
  }
  return nondeg::SetSystem(ground, std::move(sets));
}

inline BipartiteIncidenceGraph random_graph(nondeg::Rng& rng, std::size_t m, std::size_t n,
                                            std::uint64_t density_percent) {
  std::vector<std::vector<Index>> adj(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (Index p = 0; p < m; ++p) {
      if (rng.uniform_below(100) < density_percent) adj[q].push_back(p);
    }
  }
  return BipartiteIncidenceGraph(m, std::move(adj));
}

inline BipartiteIncidenceGraph matching(std::size_t n) {
  std::vector<std::vector<Index>> adj(n);
  for (std::size_t i = 0; i < n; ++i) adj[i] = {static_cast<Index>(i)};
  return BipartiteIncidenceGraph(n, std::move(adj));
}

inline BipartiteIncidenceGraph complete(std::size_t m, std::size_t n) {
  std::vector<Index> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<Index>(i);
  return BipartiteIncidenceGraph(m, std::vector<std::vector<Index>>(n, all));
}

// Plain quadratic check of the graph condition, comparing
// inter * den < num * deg in integers.
inline bool oracle_nondegenerate(const BipartiteIncidenceGraph& g, const Rational& beta) {
  for (std::size_t q = 0; q < g.right_size(); ++q) {
    const auto a = g.neighbors(q);
    const std::set<Index> sa(a.begin(), a.end());
    for (std::size_t r = 0; r < g.right_size(); ++r) {
      if (r == q) continue;
      std::size_t inter = 0;
      for (Index p : g.neighbors(r)) inter += sa.count(p);
      if (!(Rational(inter) < beta * Rational(a.size()))) return false;
    }
  }
  return true;
}

inline std::vector<RationalPoint> random_rational_points(nondeg::Rng& rng, std::size_t count,
                                                         std::size_t dim, long bound,
                                                         long max_den) {
  std::set<RationalPoint> seen;
  std::vector<RationalPoint> out;
  while (out.size() < count) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i) {
      Rational v(rng.uniform_int(-bound, bound), rng.uniform_int(1, max_den));
      v.canonicalize();
      c.push_back(v);
    }
    RationalPoint p(std::move(c));
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace testing
