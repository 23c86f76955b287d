#include "nondeg/simtri.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace nondeg {

namespace {

void require_distinct(std::span<const RationalPoint> points) {
  if (points.empty()) return;
  std::set<RationalPoint> seen;
  for (const auto& p : points) {
    require_same_dim(p, points[0].dim(), "point set");
    if (!seen.insert(p).second) throw DuplicatePoints("point set contains a repeated point");
  }
}

bool proportional(Rational d[3], const TriangleShape& shape) {
  std::sort(d, d + 3, [](const Rational& x, const Rational& y) { return y < x; });
  return d[0] * shape.middle() == d[1] * shape.longest() &&
         d[0] * shape.shortest() == d[2] * shape.longest();
}

// Squared distances replaced by their rank among the distinct values, so
// equality and order become integer comparisons.
struct DistanceTable {
  static constexpr std::uint32_t kNone = UINT32_MAX;
  std::size_t n = 0;
  std::vector<std::uint32_t> rank;  // n * n, diagonal unused
  std::vector<Rational> values;     // ascending

  DistanceTable(std::span<const RationalPoint> points) : n(points.size()), rank(n * n, kNone) {
    std::map<Rational, std::uint32_t> ids;
    std::vector<Rational> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dist[i * n + j] = squared_distance(points[i], points[j]);
        ids.emplace(dist[i * n + j], 0);
      }
    }
    for (auto& [v, id] : ids) {
      id = static_cast<std::uint32_t>(values.size());
      values.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        rank[i * n + j] = rank[j * n + i] = ids.at(dist[i * n + j]);
      }
    }
  }

  std::uint32_t find(const Rational& v) const {
    const auto it = std::lower_bound(values.begin(), values.end(), v);
    return it != values.end() && *it == v ? static_cast<std::uint32_t>(it - values.begin()) : kNone;
  }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return rank[i * n + j]; }

  // For each value taken as the longest side, the ranks the other two sides
  // must have.
  std::vector<std::array<std::uint32_t, 2>> partners(const TriangleShape& shape) const {
    const Rational mid_ratio = shape.middle() / shape.longest();
    const Rational short_ratio = shape.shortest() / shape.longest();
    std::vector<std::array<std::uint32_t, 2>> out(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
      out[v] = {find(values[v] * mid_ratio), find(values[v] * short_ratio)};
    }
    return out;
  }
};

// Role-labeled matches with a as the vertex between the longest and middle
// sides.
std::uint64_t anchor_matches(std::size_t a, const DistanceIndex& index, const DistanceTable& table,
                             const TriangleShape& shape, std::vector<PairCount>* pairs) {
  const Rational mid_ratio = shape.middle() / shape.longest();
  const Rational short_ratio = shape.shortest() / shape.longest();
  std::uint64_t total = 0;
  for (const auto& [r, bs] : index.level_sets(a)) {
    const auto candidates = index.at(a, r * mid_ratio);
    if (candidates.empty()) continue;
    const std::uint32_t bc = table.find(r * short_ratio);
    if (bc == DistanceTable::kNone) continue;
    for (Index b : bs) {
      std::uint64_t here = 0;
      for (Index c : candidates) {
        if (c != b && table(b, c) == bc) ++here;
      }
      total += here;
      if (pairs != nullptr && here > 0) pairs->push_back({static_cast<Index>(a), b, here});
    }
  }
  return total;
}

OrbitCount finish(std::uint64_t ordered, const TriangleShape& shape, std::vector<PairCount> pairs) {
  const auto aut = static_cast<std::uint64_t>(shape.automorphisms());
  if (ordered % aut != 0) {
    throw InternalError("ordered match total " + std::to_string(ordered) +
                        " is not divisible by the shape's " + std::to_string(aut) +
                        " automorphisms");
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairCount& x, const PairCount& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return OrbitCount{ordered, ordered / aut, std::move(pairs)};
}

}  // namespace

TriangleShape::TriangleShape(Rational a2, Rational b2, Rational c2) : sides_{a2, b2, c2} {
  std::sort(sides_, sides_ + 3, [](const Rational& x, const Rational& y) { return y < x; });
  const auto& [l, m, s] = sides_;
  if (s <= 0) throw InvalidArgument("triangle sides must be positive");
  // sqrt(l) < sqrt(m) + sqrt(s), squared twice.
  if (!(2 * (l * m + l * s + m * s) > l * l + m * m + s * s)) {
    throw InvalidArgument("squared sides " + to_string(l) + "," + to_string(m) + "," +
                          to_string(s) + " violate the triangle inequality");
  }
  if (l == m && m == s) {
    aut_ = 6;
  } else if (l == m || m == s) {
    aut_ = 2;
  }
}

std::span<const Index> DistanceIndex::at(std::size_t a, const Rational& r) const {
  const auto& sets = anchors_.at(a);
  const auto it = sets.find(r);
  if (it == sets.end()) return {};
  return it->second;
}

bool similarity_test(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                     const TriangleShape& shape) {
  Rational d[3] = {squared_distance(a, b), squared_distance(a, c), squared_distance(b, c)};
  if (d[0] == 0 || d[1] == 0 || d[2] == 0) throw CoincidentPoints("triangle has coincident vertices");
  return proportional(d, shape);
}

std::uint64_t count_similar_brute(std::span<const RationalPoint> points,
                                  const TriangleShape& shape) {
  require_distinct(points);
  const DistanceTable dist(points);
  const auto partners = dist.partners(shape);
  const std::size_t n = points.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::uint32_t d[3] = {dist(i, j), dist(i, k), dist(j, k)};
        std::sort(d, d + 3, std::greater<>());
        count += partners[d[0]][0] == d[1] && partners[d[0]][1] == d[2];
      }
    }
  }
  return count;
}

DistanceIndex build_distance_index(std::span<const RationalPoint> points) {
  require_distinct(points);
  std::vector<DistanceIndex::LevelSets> anchors(points.size());
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (a != b) anchors[a][squared_distance(points[a], points[b])].push_back(static_cast<Index>(b));
    }
  }
  return DistanceIndex(std::move(anchors));
}

OrbitCount count_similar_orbit(std::span<const RationalPoint> points, const TriangleShape& shape,
                               bool with_pairs) {
  const auto index = build_distance_index(points);
  const DistanceTable table(points);
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<std::uint64_t> per_anchor(points.size(), 0);
  std::vector<std::vector<PairCount>> per_anchor_pairs(with_pairs ? points.size() : 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    per_anchor[ua] =
        anchor_matches(ua, index, table, shape, with_pairs ? &per_anchor_pairs[ua] : nullptr);
  }
  std::uint64_t ordered = 0;
  for (auto c : per_anchor) ordered += c;
  std::vector<PairCount> pairs;
  for (auto& list : per_anchor_pairs) pairs.insert(pairs.end(), list.begin(), list.end());
  return finish(ordered, shape, std::move(pairs));
}

OrbitCount count_similar_orbit_serial(std::span<const RationalPoint> points,
                                      const TriangleShape& shape, bool with_pairs) {
  const auto index = build_distance_index(points);
  const DistanceTable table(points);
  std::uint64_t ordered = 0;
  std::vector<PairCount> pairs;
  for (std::size_t a = 0; a < points.size(); ++a) {
    ordered += anchor_matches(a, index, table, shape, with_pairs ? &pairs : nullptr);
  }
  return finish(ordered, shape, std::move(pairs));
}

CarriedSphere orbit_sphere_of_pair(const RationalPoint& a, const RationalPoint& b,
                                   const TriangleShape& shape) {
  if (a.dim() < 3) throw InvalidArgument("orbit spheres need ambient dimension at least 3");
  const Rational r = squared_distance(a, b);
  return sphere_sphere_orbit(a, b, r * shape.middle() / shape.longest(),
                             r * shape.shortest() / shape.longest());
}

}  // namespace nondeg
