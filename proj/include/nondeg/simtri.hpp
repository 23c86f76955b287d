#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nondeg/geometry.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/rational.hpp"

namespace nondeg {

/// Triangle shape given by squared side lengths, sorted longest first.
class TriangleShape {
 public:
  /// Sorts the sides; throws InvalidArgument for non-positive sides or
  /// sides that violate the strict triangle inequality.
  TriangleShape(Rational a2, Rational b2, Rational c2);

  const Rational& longest() const noexcept { return sides_[0]; }
  const Rational& middle() const noexcept { return sides_[1]; }
  const Rational& shortest() const noexcept { return sides_[2]; }
  /// 1 scalene, 2 isosceles, 6 equilateral.
  int automorphisms() const noexcept { return aut_; }

 private:
  Rational sides_[3];
  int aut_ = 1;
};

/// Level sets S_{a,r}: for each anchor a, the points at squared distance r,
/// keyed by r in increasing order.
class DistanceIndex {
 public:
  using LevelSets = std::map<Rational, std::vector<Index>>;

  explicit DistanceIndex(std::vector<LevelSets> anchors) : anchors_(std::move(anchors)) {}

  std::size_t size() const noexcept { return anchors_.size(); }
  const LevelSets& level_sets(std::size_t a) const { return anchors_.at(a); }
  /// Points at squared distance r from a; empty when r is not realized.
  std::span<const Index> at(std::size_t a, const Rational& r) const;

 private:
  std::vector<LevelSets> anchors_;
};

/// Sorted squared pairwise distances are proportional to the shape.
/// Throws CoincidentPoints when two of the points coincide.
bool similarity_test(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                     const TriangleShape& shape);

/// O(n^3) count of unordered triples similar to the shape.
std::uint64_t count_similar_brute(std::span<const RationalPoint> points, const TriangleShape& shape);

DistanceIndex build_distance_index(std::span<const RationalPoint> points);

struct PairCount {
  Index a;
  Index b;
  std::uint64_t count;
};

struct OrbitCount {
  /// Role-labeled triples (a, b, c) with |ab| longest and |ac| middle.
  std::uint64_t ordered = 0;
  /// ordered / automorphisms.
  std::uint64_t triangles = 0;
  /// Nonzero per-pair counts in (a, b) order, when requested.
  std::vector<PairCount> pairs;
};

/// Counts through the level sets: for each ordered pair (a, b) with
/// r = |ab|^2, the candidates c are S_{a, r*middle/longest}, filtered by
/// |bc|^2 = r*shortest/longest. OpenMP over anchors.
OrbitCount count_similar_orbit(std::span<const RationalPoint> points, const TriangleShape& shape,
                               bool with_pairs = false);

/// Reference version of the same algorithm without threads.
OrbitCount count_similar_orbit_serial(std::span<const RationalPoint> points,
                                      const TriangleShape& shape, bool with_pairs = false);

/// Locus of third vertices c completing (a, b, c) with the shape's roles.
CarriedSphere orbit_sphere_of_pair(const RationalPoint& a, const RationalPoint& b,
                                   const TriangleShape& shape);

}  // namespace nondeg
