#include "nondeg/incidence.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "combinatorics.hpp"

namespace nondeg {

namespace {

// Homogeneous integer coordinates: a rational point x becomes (L x, L) with
// L the lcm of its denominators, and a hyperplane n.x = c becomes the
// integer form (L n, -L c). Incidence is then an integer dot product of 0.
std::vector<Integer> homogenize(std::span<const Rational> coords, const Rational* tail) {
  Integer lcm = 1;
  for (const auto& c : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  if (tail != nullptr) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), tail->get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coords.size() + 1);
  for (const auto& c : coords) out.push_back(c.get_num() * (lcm / c.get_den()));
  if (tail != nullptr) {
    out.push_back(-(tail->get_num() * (lcm / tail->get_den())));
  } else {
    out.push_back(lcm);
  }
  return out;
}

std::vector<Integer> homogenize(const RationalPoint& p) { return homogenize(p.coords(), nullptr); }

std::vector<Integer> homogenize(const Hyperplane& h) {
  return homogenize(h.normal(), &h.offset());
}

BipartiteIncidenceGraph incidence_kernel(const std::vector<std::vector<Integer>>& points,
                                         const std::vector<std::vector<Integer>>& forms,
                                         std::size_t left_size) {
  std::vector<std::vector<Index>> adjacency(forms.size());
  const auto n = static_cast<std::ptrdiff_t>(forms.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    const auto& form = forms[static_cast<std::size_t>(q)];
    auto& out = adjacency[static_cast<std::size_t>(q)];
    Integer acc;
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& x = points[p];
      acc = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        mpz_addmul(acc.get_mpz_t(), form[i].get_mpz_t(), x[i].get_mpz_t());
      }
      if (sgn(acc) == 0) out.push_back(static_cast<Index>(p));
    }
  }
  return BipartiteIncidenceGraph(left_size, std::move(adjacency));
}

template <typename Object, typename Pred>
BipartiteIncidenceGraph double_loop(std::span<const RationalPoint> points,
                                    std::span<const Object> objects, Pred&& incident) {
  std::vector<std::vector<Index>> adjacency(objects.size());
  for (std::size_t q = 0; q < objects.size(); ++q) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (incident(points[p], objects[q])) adjacency[q].push_back(static_cast<Index>(p));
    }
  }
  return BipartiteIncidenceGraph(points.size(), std::move(adjacency));
}

template <typename Object>
void require_dims(std::span<const RationalPoint> points, std::span<const Object> objects) {
  if (points.empty()) return;
  const std::size_t d = points[0].dim();
  for (const auto& p : points) require_same_dim(p, d, "build_incidence point");
  for (const auto& o : objects) {
    if (o.dim() != d) throw DimensionMismatch("build_incidence: object dimension differs from points");
  }
}

std::vector<RationalPoint> points_on(std::span<const RationalPoint> points, const Sphere& s) {
  std::vector<RationalPoint> w;
  for (const auto& p : points) {
    if (on_sphere(p, s)) w.push_back(p);
  }
  return w;
}

std::vector<RationalPoint> points_on(std::span<const RationalPoint> points, const Hyperplane& h) {
  std::vector<RationalPoint> w;
  for (const auto& p : points) {
    if (on_hyperplane(p, h)) w.push_back(p);
  }
  return w;
}

std::vector<RationalPoint> gather(std::span<const RationalPoint> pts,
                                  std::span<const std::size_t> idx) {
  std::vector<RationalPoint> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

}  // namespace

BipartiteIncidenceGraph::BipartiteIncidenceGraph(std::size_t left_size,
                                                 std::vector<std::vector<Index>> adjacency)
    : left_size_(left_size), adjacency_(std::move(adjacency)) {
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("repeated edge in neighbor list");
    }
    if (!list.empty() && list.back() >= left_size_) {
      throw InvalidArgument("neighbor index " + std::to_string(list.back()) + " out of range [0, " +
                            std::to_string(left_size_) + ")");
    }
    edge_count_ += list.size();
  }
}

BipartiteIncidenceGraph BipartiteIncidenceGraph::from_edges(
    std::size_t left_size, std::size_t right_size, std::span<const std::pair<Index, Index>> edges) {
  std::vector<std::vector<Index>> adjacency(right_size);
  for (const auto& [p, q] : edges) {
    if (q >= right_size) {
      throw InvalidArgument("right index " + std::to_string(q) + " out of range [0, " +
                            std::to_string(right_size) + ")");
    }
    adjacency[q].push_back(p);
  }
  return BipartiteIncidenceGraph(left_size, std::move(adjacency));
}

BipartiteIncidenceGraph BipartiteIncidenceGraph::transpose() const {
  std::vector<std::vector<Index>> adjacency(left_size_);
  for (std::size_t q = 0; q < adjacency_.size(); ++q) {
    for (Index p : adjacency_[q]) adjacency[p].push_back(static_cast<Index>(q));
  }
  return BipartiteIncidenceGraph(adjacency_.size(), std::move(adjacency));
}

std::vector<std::pair<Index, Index>> BipartiteIncidenceGraph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(edge_count_);
  for (std::size_t q = 0; q < adjacency_.size(); ++q) {
    for (Index p : adjacency_[q]) out.emplace_back(p, static_cast<Index>(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteIncidenceGraph BipartiteIncidenceGraph::restrict_right(std::span<const Index> keep) const {
  std::vector<std::vector<Index>> adjacency;
  adjacency.reserve(keep.size());
  for (Index q : keep) adjacency.push_back(adjacency_.at(q));
  return BipartiteIncidenceGraph(left_size_, std::move(adjacency));
}

void validate_beta(const Rational& beta) {
  if (beta <= 0 || beta >= 1) {
    throw BetaOutOfRange("beta must satisfy 0 < beta < 1, got " + to_string(beta));
  }
}

std::size_t intersection_size(std::span<const Index> a, std::span<const Index> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

BipartiteIncidenceGraph build_incidence(std::span<const RationalPoint> points,
                                        std::span<const Sphere> spheres) {
  require_dims(points, spheres);
  std::vector<std::vector<Integer>> lifted_points;
  lifted_points.reserve(points.size());
  for (const auto& p : points) lifted_points.push_back(homogenize(lift_point(p)));
  std::vector<std::vector<Integer>> forms;
  forms.reserve(spheres.size());
  for (const auto& s : spheres) forms.push_back(homogenize(lift_sphere(s)));
  return incidence_kernel(lifted_points, forms, points.size());
}

BipartiteIncidenceGraph build_incidence(std::span<const RationalPoint> points,
                                        std::span<const Hyperplane> planes) {
  require_dims(points, planes);
  std::vector<std::vector<Integer>> hp;
  hp.reserve(points.size());
  for (const auto& p : points) hp.push_back(homogenize(p));
  std::vector<std::vector<Integer>> forms;
  forms.reserve(planes.size());
  for (const auto& h : planes) forms.push_back(homogenize(h));
  return incidence_kernel(hp, forms, points.size());
}

BipartiteIncidenceGraph build_incidence_serial(std::span<const RationalPoint> points,
                                               std::span<const Sphere> spheres) {
  require_dims(points, spheres);
  return double_loop(points, spheres,
                     [](const RationalPoint& p, const Sphere& s) { return on_sphere(p, s); });
}

BipartiteIncidenceGraph build_incidence_serial(std::span<const RationalPoint> points,
                                               std::span<const Hyperplane> planes) {
  require_dims(points, planes);
  return double_loop(points, planes, [](const RationalPoint& p, const Hyperplane& h) {
    return on_hyperplane(p, h);
  });
}

bool is_vertex_nondegenerate(const BipartiteIncidenceGraph& g, std::size_t q,
                             const Rational& beta) {
  validate_beta(beta);
  if (q >= g.right_size()) throw InvalidArgument("vertex index out of range");
  const auto nq = g.neighbors(q);
  const Rational limit = beta * static_cast<unsigned long>(nq.size());
  for (std::size_t other = 0; other < g.right_size(); ++other) {
    if (other == q) continue;
    if (Rational(static_cast<unsigned long>(intersection_size(nq, g.neighbors(other)))) >= limit) {
      return false;
    }
  }
  return true;
}

NondegeneracyReport check_nondegenerate(const BipartiteIncidenceGraph& g, const Rational& beta,
                                        std::size_t witness_cap) {
  validate_beta(beta);
  if (witness_cap == 0) throw InvalidArgument("witness cap must be at least 1");
  const std::size_t n = g.right_size();

  // For integer k, k < beta*deg iff k < ceil(beta*deg).
  std::vector<std::size_t> threshold(n);
  for (std::size_t q = 0; q < n; ++q) {
    const Rational t = beta * static_cast<unsigned long>(g.degree(q));
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    threshold[q] = c.get_ui();
  }

  std::vector<std::vector<NondegeneracyWitness>> found(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t sq = 0; sq < sn; ++sq) {
    const auto q = static_cast<std::size_t>(sq);
    const auto nq = g.neighbors(q);
    for (std::size_t other = 0; other < n; ++other) {
      if (other == q) continue;
      const std::size_t inter = intersection_size(nq, g.neighbors(other));
      if (inter >= threshold[q]) {
        found[q].push_back({static_cast<Index>(q), static_cast<Index>(other), inter, nq.size()});
      }
    }
  }

  NondegeneracyReport report{beta, true, {}, 0};
  for (auto& list : found) {
    report.total_violations += list.size();
    for (auto& w : list) {
      if (report.witnesses.size() < witness_cap) report.witnesses.push_back(w);
    }
  }
  report.verdict = report.total_violations == 0;
  return report;
}

NondegeneracyReport check_nondegenerate_serial(const BipartiteIncidenceGraph& g,
                                               const Rational& beta, std::size_t witness_cap) {
  validate_beta(beta);
  if (witness_cap == 0) throw InvalidArgument("witness cap must be at least 1");
  NondegeneracyReport report{beta, true, {}, 0};
  for (std::size_t q = 0; q < g.right_size(); ++q) {
    for (std::size_t other = 0; other < g.right_size(); ++other) {
      if (other == q) continue;
      const std::size_t inter = intersection_size(g.neighbors(q), g.neighbors(other));
      const std::size_t deg = g.degree(q);
      if (!(Rational(static_cast<unsigned long>(inter)) < beta * static_cast<unsigned long>(deg))) {
        ++report.total_violations;
        if (report.witnesses.size() < witness_cap) {
          report.witnesses.push_back({static_cast<Index>(q), static_cast<Index>(other), inter, deg});
        }
      }
    }
  }
  report.verdict = report.total_violations == 0;
  return report;
}

NondegeneracyReport check_dually_nondegenerate(const BipartiteIncidenceGraph& g,
                                               const Rational& beta, std::size_t witness_cap) {
  return check_nondegenerate(g.transpose(), beta, witness_cap);
}

std::size_t richest_sphere_section(std::span<const RationalPoint> points, const Sphere& s) {
  const auto w = points_on(points, s);
  if (w.size() <= 1) return w.size();
  const std::size_t d = s.dim();
  if (affine_rank(w) < static_cast<int>(d)) return w.size();  // all of W in one section

  std::set<Hyperplane> seen;
  std::size_t best = 0;
  detail::for_each_combination(w.size(), d, [&](std::span<const std::size_t> idx) {
    const auto subset = gather(w, idx);
    if (affine_rank(subset) != static_cast<int>(d) - 1) return true;
    auto h = hyperplane_through(subset);
    if (!seen.insert(h).second) return true;
    std::size_t count = 0;
    for (const auto& p : w) count += on_hyperplane(p, h) ? 1 : 0;
    best = std::max(best, count);
    return true;
  });
  return best;
}

std::size_t richest_subflat(std::span<const RationalPoint> points, const Hyperplane& h) {
  const auto w = points_on(points, h);
  if (w.size() <= 1) return w.size();
  const std::size_t d = h.dim();
  if (d < 2) throw InvalidArgument("hyperplane flats need ambient dimension at least 2");
  const int flat_rank = static_cast<int>(d) - 2;
  if (affine_rank(w) < static_cast<int>(d) - 1) return w.size();  // W inside a proper flat

  std::set<std::vector<std::size_t>> seen;
  std::size_t best = 0;
  detail::for_each_combination(w.size(), d - 1, [&](std::span<const std::size_t> idx) {
    auto subset = gather(w, idx);
    if (affine_rank(subset) != flat_rank) return true;
    std::vector<std::size_t> members;
    subset.push_back(w[0]);
    for (std::size_t i = 0; i < w.size(); ++i) {
      subset.back() = w[i];
      if (affine_rank(subset) == flat_rank) members.push_back(i);
    }
    const std::size_t count = members.size();
    if (seen.insert(std::move(members)).second) best = std::max(best, count);
    return true;
  });
  return best;
}

bool geometric_nondegeneracy_sphere(std::span<const RationalPoint> points, const Sphere& s,
                                    const Rational& beta) {
  validate_beta(beta);
  const std::size_t total = points_on(points, s).size();
  if (total <= 1) return true;
  const std::size_t rich = richest_sphere_section(points, s);
  // Degenerate iff rich >= beta * total.
  return Rational(static_cast<unsigned long>(rich)) < beta * static_cast<unsigned long>(total);
}

bool geometric_nondegeneracy_hyperplane(std::span<const RationalPoint> points,
                                        const Hyperplane& h, const Rational& beta) {
  validate_beta(beta);
  const std::size_t total = points_on(points, h).size();
  if (total <= 1) return true;
  const std::size_t rich = richest_subflat(points, h);
  // Degenerate iff rich > beta * total.
  return Rational(static_cast<unsigned long>(rich)) <= beta * static_cast<unsigned long>(total);
}

bool is_spanning_hyperplane(std::span<const RationalPoint> points, const Hyperplane& h) {
  const auto w = points_on(points, h);
  const std::size_t d = h.dim();
  return w.size() >= d && affine_rank(w) == static_cast<int>(d) - 1;
}

bool is_spanning_sphere(std::span<const RationalPoint> points, const Sphere& s) {
  const auto w = points_on(points, s);
  const std::size_t d = s.dim();
  return w.size() >= d + 1 && affine_rank(w) == static_cast<int>(d);
}

std::vector<Hyperplane> spanning_hyperplanes(std::span<const RationalPoint> points) {
  std::set<Hyperplane> found;
  if (points.empty()) return {};
  const std::size_t d = points[0].dim();
  detail::for_each_combination(points.size(), d, [&](std::span<const std::size_t> idx) {
    const auto subset = gather(points, idx);
    if (affine_rank(subset) == static_cast<int>(d) - 1) found.insert(hyperplane_through(subset));
    return true;
  });
  return {found.begin(), found.end()};
}

std::vector<Sphere> spanning_spheres(std::span<const RationalPoint> points) {
  std::set<Sphere> found;
  if (points.empty()) return {};
  const std::size_t d = points[0].dim();
  detail::for_each_combination(points.size(), d + 1, [&](std::span<const std::size_t> idx) {
    const auto subset = gather(points, idx);
    if (affine_rank(subset) == static_cast<int>(d)) found.insert(circumsphere(subset));
    return true;
  });
  return {found.begin(), found.end()};
}

std::size_t count_spanning_hyperplanes(std::span<const RationalPoint> points) {
  return spanning_hyperplanes(points).size();
}

std::size_t count_spanning_spheres(std::span<const RationalPoint> points) {
  return spanning_spheres(points).size();
}

}  // namespace nondeg
