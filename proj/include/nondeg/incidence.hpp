#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nondeg/geometry.hpp"
#include "nondeg/rational.hpp"

namespace nondeg {

using Index = std::uint32_t;

/// Bipartite graph G = (P, Q) stored as the neighbor set N(q) of every
/// right vertex. Neighbor lists are sorted and duplicate-free.
class BipartiteIncidenceGraph {
 public:
  BipartiteIncidenceGraph() = default;
  /// Sorts each list; throws InvalidArgument on out-of-range or repeated
  /// neighbors.
  BipartiteIncidenceGraph(std::size_t left_size, std::vector<std::vector<Index>> adjacency);

  static BipartiteIncidenceGraph from_edges(std::size_t left_size, std::size_t right_size,
                                            std::span<const std::pair<Index, Index>> edges);

  std::size_t left_size() const noexcept { return left_size_; }
  std::size_t right_size() const noexcept { return adjacency_.size(); }
  std::span<const Index> neighbors(std::size_t q) const { return adjacency_.at(q); }
  std::size_t degree(std::size_t q) const { return adjacency_.at(q).size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<std::vector<Index>>& adjacency() const noexcept { return adjacency_; }

  /// Swaps the roles of P and Q.
  BipartiteIncidenceGraph transpose() const;

  /// Edges (p, q) in lexicographic order.
  std::vector<std::pair<Index, Index>> edges() const;

  /// Drops the right vertices not in `keep` (which must be sorted).
  BipartiteIncidenceGraph restrict_right(std::span<const Index> keep) const;

  friend bool operator==(const BipartiteIncidenceGraph&, const BipartiteIncidenceGraph&) = default;

 private:
  std::size_t left_size_ = 0;
  std::vector<std::vector<Index>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct NondegeneracyWitness {
  Index q;
  Index other;
  std::size_t intersection;
  std::size_t degree;

  friend bool operator==(const NondegeneracyWitness&, const NondegeneracyWitness&) = default;
};

struct NondegeneracyReport {
  Rational beta;
  bool verdict = true;
  /// Violations in (q, other) order, truncated at the cap.
  std::vector<NondegeneracyWitness> witnesses;
  std::size_t total_violations = 0;
};

inline constexpr std::size_t kDefaultWitnessCap = 1000;

/// Throws BetaOutOfRange unless 0 < beta < 1.
void validate_beta(const Rational& beta);

std::size_t intersection_size(std::span<const Index> a, std::span<const Index> b);

/// Edge (p, q) iff p lies on object q. OpenMP over objects; output is
/// independent of the thread count.
BipartiteIncidenceGraph build_incidence(std::span<const RationalPoint> points,
                                        std::span<const Sphere> spheres);
BipartiteIncidenceGraph build_incidence(std::span<const RationalPoint> points,
                                        std::span<const Hyperplane> planes);

/// Reference double loop over on_sphere / on_hyperplane.
BipartiteIncidenceGraph build_incidence_serial(std::span<const RationalPoint> points,
                                               std::span<const Sphere> spheres);
BipartiteIncidenceGraph build_incidence_serial(std::span<const RationalPoint> points,
                                               std::span<const Hyperplane> planes);

/// |N(q) ∩ N(q')| < beta |N(q)| for every q' != q.
bool is_vertex_nondegenerate(const BipartiteIncidenceGraph& g, std::size_t q,
                             const Rational& beta);

NondegeneracyReport check_nondegenerate(const BipartiteIncidenceGraph& g, const Rational& beta,
                                        std::size_t witness_cap = kDefaultWitnessCap);
NondegeneracyReport check_nondegenerate_serial(const BipartiteIncidenceGraph& g,
                                               const Rational& beta,
                                               std::size_t witness_cap = kDefaultWitnessCap);

/// The same test with P and Q swapped.
NondegeneracyReport check_dually_nondegenerate(const BipartiteIncidenceGraph& g,
                                               const Rational& beta,
                                               std::size_t witness_cap = kDefaultWitnessCap);

// Geometric nondegeneracy. A sphere is degenerate when some hyperplane
// section holds at least beta |S ∩ P| points; a hyperplane is degenerate when
// some lower flat inside it holds more than beta |H ∩ P| points. Objects with
// at most one point are nondegenerate.
bool geometric_nondegeneracy_sphere(std::span<const RationalPoint> points, const Sphere& s,
                                    const Rational& beta);
bool geometric_nondegeneracy_hyperplane(std::span<const RationalPoint> points,
                                        const Hyperplane& h, const Rational& beta);

/// Largest number of points of S ∩ P on one hyperplane section.
std::size_t richest_sphere_section(std::span<const RationalPoint> points, const Sphere& s);
/// Largest number of points of H ∩ P on one proper flat inside H.
std::size_t richest_subflat(std::span<const RationalPoint> points, const Hyperplane& h);

/// Contains d (resp. d+1) input points in general position.
bool is_spanning_hyperplane(std::span<const RationalPoint> points, const Hyperplane& h);
bool is_spanning_sphere(std::span<const RationalPoint> points, const Sphere& s);

std::size_t count_spanning_hyperplanes(std::span<const RationalPoint> points);
std::size_t count_spanning_spheres(std::span<const RationalPoint> points);

std::vector<Hyperplane> spanning_hyperplanes(std::span<const RationalPoint> points);
std::vector<Sphere> spanning_spheres(std::span<const RationalPoint> points);

}  // namespace nondeg
