#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nondeg/geometry.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/rational.hpp"

namespace nondeg {

struct Seed {
  std::uint64_t value = 0;
};

/// Measured statistics of one random dense graph.
struct ConstructionOutcome {
  BipartiteIncidenceGraph graph;
  Rational rho;
  std::size_t min_degree = 0;
  std::size_t max_pair_intersection = 0;
  /// beta-nondegenerate and at least (beta/6) m n edges.
  bool passed = false;
};

/// Keeps each edge of P x Q independently with probability rho = beta/3.
/// An edge is kept when a 64-bit draw is below floor(rho * 2^64), so the
/// sampling bias is below 2^-64. Draws run q-major on the stream
/// "dense_graph.edges". No retries: callers read `passed`.
ConstructionOutcome random_dense_graph(std::size_t m, std::size_t n, const Rational& beta,
                                       Seed seed);

/// Distinct integer points uniform in [-bound, bound]^dim.
PointSet gen_random_points(std::size_t count, std::size_t dim, std::uint64_t coord_bound,
                           Seed seed);

/// Inverse stereographic projection from the north pole onto the unit
/// sphere in R^{k+1}: t -> (2t, |t|^2 - 1) / (|t|^2 + 1). t = 0 maps to the
/// south pole (0, ..., 0, -1).
RationalPoint inverse_stereographic(std::span<const Rational> t);

/// Distinct rational points exactly on `s`. The radius must be rational
/// (sq_radius a rational square), else UnrepresentableRadius.
PointSet gen_points_on_sphere(std::size_t count, const Sphere& s, Seed seed);

/// k distinct circumspheres of random affinely independent (dim+1)-subsets.
/// Throws Exhausted when the retry budget runs out first.
std::vector<Sphere> gen_sphere_family(std::span<const RationalPoint> points, std::size_t k,
                                      Seed seed);

struct DegenerateCluster {
  PointSet points;
  Sphere sphere;
  /// Great section holding the first `section_count` points.
  Hyperplane section;
  std::size_t section_count = 0;
};

/// `section_count` points on the great (dim-2)-sphere {x_dim = c_dim} of a
/// sphere (a circle when dim = 3) followed by `off_count` points of the same
/// sphere off that section. Degenerate for every
/// beta <= section_count / (section_count + off_count).
DegenerateCluster gen_degenerate_cluster(std::size_t dim, std::size_t section_count,
                                         std::size_t off_count, Seed seed);

}  // namespace nondeg
