#include "nondeg/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "nondeg/rng.hpp"

namespace nondeg {

namespace {

// Numerators and denominators of stereographic parameters.
constexpr std::int64_t kParamHeight = 24;

std::vector<Rational> random_params(Rng& rng, std::size_t k) {
  std::vector<Rational> t(k);
  for (auto& x : t) {
    x = Rational(rng.uniform_int(-kParamHeight, kParamHeight), rng.uniform_int(1, kParamHeight));
    x.canonicalize();
  }
  return t;
}

RationalPoint scale_translate(const RationalPoint& u, const Rational& r, const RationalPoint& c) {
  std::vector<Rational> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = c[i] + r * u[i];
  return RationalPoint(std::move(out));
}

std::size_t retry_budget(std::size_t wanted) { return 1024 + 64 * wanted; }

}  // namespace

ConstructionOutcome random_dense_graph(std::size_t m, std::size_t n, const Rational& beta,
                                       Seed seed) {
  validate_beta(beta);
  if (m == 0 || n == 0) throw InvalidArgument("random_dense_graph needs m, n >= 1");
  const Rational rho = beta / 3;

  // floor(rho * 2^64) fits in 64 bits because rho < 1.
  Integer scaled = rho.get_num() << 64;
  Integer threshold_z;
  mpz_fdiv_q(threshold_z.get_mpz_t(), scaled.get_mpz_t(), rho.get_den_mpz_t());
  std::uint64_t threshold = 0;
  mpz_export(&threshold, nullptr, -1, sizeof threshold, 0, 0, threshold_z.get_mpz_t());

  Rng rng(seed.value, "dense_graph.edges");
  std::vector<std::vector<Index>> adjacency(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < m; ++p) {
      if (rng.next() < threshold) adjacency[q].push_back(static_cast<Index>(p));
    }
  }
  ConstructionOutcome out;
  out.graph = BipartiteIncidenceGraph(m, std::move(adjacency));
  out.rho = rho;
  out.min_degree = out.graph.degree(0);
  for (std::size_t q = 0; q < n; ++q) out.min_degree = std::min(out.min_degree, out.graph.degree(q));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t r = q + 1; r < n; ++r) {
      out.max_pair_intersection = std::max(
          out.max_pair_intersection, intersection_size(out.graph.neighbors(q), out.graph.neighbors(r)));
    }
  }
  const bool nondegenerate = check_nondegenerate(out.graph, beta, 1).verdict;
  const bool dense = Rational(static_cast<unsigned long>(out.graph.edge_count())) * 6 >=
                     beta * static_cast<unsigned long>(m) * static_cast<unsigned long>(n);
  out.passed = nondegenerate && dense;
  return out;
}

PointSet gen_random_points(std::size_t count, std::size_t dim, std::uint64_t coord_bound,
                           Seed seed) {
  if (count == 0 || dim == 0) throw InvalidArgument("gen_random_points needs count, dim >= 1");
  if (coord_bound > static_cast<std::uint64_t>(INT64_MAX / 2)) {
    throw InvalidArgument("coordinate bound too large");
  }
  Integer side = Integer(std::to_string(2 * coord_bound + 1));
  Integer lattice;
  mpz_pow_ui(lattice.get_mpz_t(), side.get_mpz_t(), dim);
  if (lattice < Integer(std::to_string(count))) {
    throw InfeasibleDedup(std::to_string(count) + " distinct points requested but the lattice has " +
                          lattice.get_str());
  }
  const auto b = static_cast<std::int64_t>(coord_bound);
  Rng rng(seed.value, "points.coords");
  std::set<RationalPoint> seen;
  PointSet out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<Rational> c(dim);
    for (auto& x : c) x = Rational(rng.uniform_int(-b, b));
    RationalPoint p(std::move(c));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

RationalPoint inverse_stereographic(std::span<const Rational> t) {
  Rational s = 0;
  for (const auto& x : t) s += x * x;
  const Rational denom = s + 1;
  std::vector<Rational> out;
  out.reserve(t.size() + 1);
  for (const auto& x : t) out.push_back(2 * x / denom);
  out.push_back((s - 1) / denom);
  return RationalPoint(std::move(out));
}

PointSet gen_points_on_sphere(std::size_t count, const Sphere& s, Seed seed) {
  if (s.dim() < 2) throw InvalidArgument("points on a sphere need dimension at least 2");
  const auto r = rational_sqrt(s.sq_radius());
  if (!r) {
    throw UnrepresentableRadius("squared radius " + to_string(s.sq_radius()) +
                                " is not the square of a rational");
  }
  Rng rng(seed.value, "onsphere.params");
  std::set<RationalPoint> seen;
  PointSet out;
  out.reserve(count);
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= retry_budget(count)) throw Exhausted("could not draw enough distinct sphere points");
    auto p = scale_translate(inverse_stereographic(random_params(rng, s.dim() - 1)), *r, s.center());
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Sphere> gen_sphere_family(std::span<const RationalPoint> points, std::size_t k,
                                      Seed seed) {
  if (points.empty()) throw InvalidArgument("gen_sphere_family needs points");
  const std::size_t d = points[0].dim();
  if (points.size() < d + 1) {
    throw InvalidArgument("gen_sphere_family needs at least dim + 1 = " + std::to_string(d + 1) +
                          " points");
  }
  Rng rng(seed.value, "spheres.subsets");
  std::vector<std::size_t> order(points.size());
  std::set<Sphere> seen;
  std::vector<Sphere> out;
  out.reserve(k);
  PointSet subset(d + 1);
  for (std::size_t attempt = 0; out.size() < k; ++attempt) {
    if (attempt >= retry_budget(k)) {
      throw Exhausted("found only " + std::to_string(out.size()) + " of " + std::to_string(k) +
                      " distinct spanning spheres");
    }
    // Partial Fisher-Yates picks d+1 distinct indices.
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i <= d; ++i) {
      const auto j = i + rng.uniform_below(order.size() - i);
      std::swap(order[i], order[j]);
      subset[i] = points[order[i]];
    }
    if (affine_rank(subset) != static_cast<int>(d)) continue;
    auto s = circumsphere(subset);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

DegenerateCluster gen_degenerate_cluster(std::size_t dim, std::size_t section_count,
                                         std::size_t off_count, Seed seed) {
  if (dim < 3) throw InvalidArgument("degenerate cluster needs dimension at least 3");
  if (section_count < 3) throw InvalidArgument("degenerate cluster needs at least 3 section points");

  Rng shape(seed.value, "cluster.sphere");
  std::vector<Rational> c(dim);
  for (auto& x : c) x = Rational(shape.uniform_int(-8, 8));
  const RationalPoint center(std::move(c));
  const Rational radius(shape.uniform_int(1, 5));
  Sphere sphere(center, radius * radius);

  std::vector<Rational> normal(dim);
  normal[dim - 1] = 1;
  Hyperplane section(std::move(normal), center[dim - 1]);

  Rng params(seed.value, "cluster.params");
  std::set<RationalPoint> seen;
  PointSet pts;
  pts.reserve(section_count + off_count);
  const std::size_t budget = retry_budget(section_count + off_count);
  std::size_t attempts = 0;
  while (pts.size() < section_count) {
    if (++attempts > budget) throw Exhausted("could not place section points");
    auto u = inverse_stereographic(random_params(params, dim - 2));
    std::vector<Rational> full(u.coords().begin(), u.coords().end());
    full.push_back(0);
    auto p = scale_translate(RationalPoint(std::move(full)), radius, center);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  while (pts.size() < section_count + off_count) {
    if (++attempts > budget) throw Exhausted("could not place off-section points");
    auto u = inverse_stereographic(random_params(params, dim - 1));
    if (u[dim - 1] == 0) continue;
    auto p = scale_translate(u, radius, center);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return DegenerateCluster{std::move(pts), std::move(sphere), std::move(section), section_count};
}

}  // namespace nondeg
