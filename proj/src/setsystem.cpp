#include "nondeg/setsystem.hpp"

#include <algorithm>
#include <string>

#include "combinatorics.hpp"

namespace nondeg {

namespace {

constexpr std::size_t kMaskBits = 64;

std::vector<std::uint64_t> distinct_masks(const SetSystem& f) {
  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (const auto& s : f.sets()) {
    std::uint64_t m = 0;
    for (Index e : s) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

std::size_t distinct_traces(const std::vector<std::uint64_t>& masks, std::uint64_t b,
                            std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (auto m : masks) scratch.push_back(m & b);
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

std::uint64_t subset_mask(std::span<const std::size_t> idx) {
  std::uint64_t b = 0;
  for (auto i : idx) b |= std::uint64_t{1} << i;
  return b;
}

void require_ground(const SetSystem& f, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaskBits);
  if (f.ground_size() > limit) {
    throw GroundTooLarge("ground set of size " + std::to_string(f.ground_size()) +
                         " exceeds cap " + std::to_string(limit));
  }
}

struct PairChoice {
  Index q1;
  Index q2;
  std::size_t inter;
};

// Chooses the surviving pair with the least symmetric difference, ties to
// the lexicographically lowest (u, v), then orients it so the peeled vertex
// has the smaller set difference (ties to the lower index).
template <typename InterFn>
PairChoice choose_pair(const BipartiteIncidenceGraph& g, const std::vector<Index>& alive,
                       InterFn&& inter_of) {
  std::size_t best_sym = SIZE_MAX;
  Index bu = 0, bv = 0;
  std::size_t best_inter = 0;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    for (std::size_t j = i + 1; j < alive.size(); ++j) {
      const Index u = alive[i], v = alive[j];
      const std::size_t inter = inter_of(u, v);
      const std::size_t sym = g.degree(u) + g.degree(v) - 2 * inter;
      if (sym < best_sym) {
        best_sym = sym;
        bu = u;
        bv = v;
        best_inter = inter;
      }
    }
  }
  const std::size_t su = g.degree(bu) - best_inter;
  const std::size_t sv = g.degree(bv) - best_inter;
  if (su <= sv) return {bu, bv, best_inter};
  return {bv, bu, best_inter};
}

template <typename InterFn>
PeelCertificate peel(const BipartiteIncidenceGraph& g, const Rational& beta, InterFn&& inter_of) {
  validate_beta(beta);
  if (g.right_size() == 0) throw InvalidArgument("peel_certify needs at least one right vertex");
  const Rational one_minus = 1 - beta;

  PeelCertificate cert;
  cert.beta = beta;
  std::vector<Index> alive(g.right_size());
  for (std::size_t q = 0; q < alive.size(); ++q) alive[q] = static_cast<Index>(q);

  Rational total = 0;
  while (alive.size() >= 2) {
    const auto c = choose_pair(g, alive, inter_of);
    const std::size_t deg = g.degree(c.q1);
    const std::size_t setminus = deg - c.inter;
    Rational charge = Rational(static_cast<unsigned long>(setminus)) / one_minus;
    if (charge < static_cast<unsigned long>(deg)) throw NotNondegenerate(c.q1, c.q2, c.inter, deg);
    total += charge;
    cert.steps.push_back({c.q1, c.q2, setminus, std::move(charge)});
    alive.erase(std::find(alive.begin(), alive.end(), c.q1));
  }
  cert.final_degree = g.degree(alive.front());
  cert.certified_bound = total + static_cast<unsigned long>(cert.final_degree);
  return cert;
}

}  // namespace

SetSystem::SetSystem(std::size_t ground_size, std::vector<std::vector<Index>> sets)
    : ground_size_(ground_size), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= ground_size_) {
      throw InvalidArgument("set element " + std::to_string(s.back()) + " outside ground set of size " +
                            std::to_string(ground_size_));
    }
  }
}

int vc_dimension(const SetSystem& f, std::size_t ground_cap) {
  require_ground(f, ground_cap);
  if (f.size() == 0) return -1;
  const auto masks = distinct_masks(f);
  std::vector<std::uint64_t> scratch;
  int vc = 0;
  for (std::size_t k = 1; k <= f.ground_size(); ++k) {
    // Shattering k elements needs 2^k distinct sets.
    if (k >= kMaskBits - 1 || (std::uint64_t{1} << k) > masks.size()) break;
    const std::size_t need = std::size_t{1} << k;
    bool shattered = false;
    detail::for_each_combination(f.ground_size(), k, [&](std::span<const std::size_t> idx) {
      shattered = distinct_traces(masks, subset_mask(idx), scratch) == need;
      return !shattered;
    });
    // Shattering is hereditary, so no larger set can be shattered.
    if (!shattered) break;
    vc = static_cast<int>(k);
  }
  return vc;
}

std::uint64_t shatter_function(const SetSystem& f, std::size_t z, std::uint64_t budget) {
  require_ground(f, kMaskBits);
  if (z > f.ground_size()) {
    throw InvalidArgument("z = " + std::to_string(z) + " exceeds ground size " +
                          std::to_string(f.ground_size()));
  }
  Integer work;
  mpz_bin_uiui(work.get_mpz_t(), f.ground_size(), z);
  work *= std::max<unsigned long>(1, f.size());
  if (work > Integer(std::to_string(budget))) {
    throw BudgetExceeded("enumeration of " + work.get_str() + " traces exceeds budget " +
                         std::to_string(budget));
  }
  const auto masks = distinct_masks(f);
  if (masks.empty()) return 0;
  std::vector<std::uint64_t> scratch;
  std::size_t best = 0;
  detail::for_each_combination(f.ground_size(), z, [&](std::span<const std::size_t> idx) {
    best = std::max(best, distinct_traces(masks, subset_mask(idx), scratch));
    return true;
  });
  return best;
}

Integer sauer_envelope(int d, std::size_t z) {
  Integer total = 0;
  Integer term;
  for (int i = 0; i <= d && static_cast<std::size_t>(i) <= z; ++i) {
    mpz_bin_uiui(term.get_mpz_t(), z, static_cast<unsigned long>(i));
    total += term;
  }
  return total;
}

SetSystem left_system(const BipartiteIncidenceGraph& g) {
  return SetSystem(g.left_size(), g.adjacency());
}

SetSystem right_system(const BipartiteIncidenceGraph& g) {
  auto t = g.transpose();
  return SetSystem(t.left_size(), t.adjacency());
}

std::pair<int, int> left_right_vc(const BipartiteIncidenceGraph& g, std::size_t ground_cap) {
  return {vc_dimension(left_system(g), ground_cap), vc_dimension(right_system(g), ground_cap)};
}

NotNondegenerate::NotNondegenerate(Index q, Index other, std::size_t intersection,
                                   std::size_t degree)
    : Error("NotNondegenerate", "vertex " + std::to_string(q) + " shares " +
                                    std::to_string(intersection) + " of its " +
                                    std::to_string(degree) + " neighbors with vertex " +
                                    std::to_string(other)),
      q_(q),
      other_(other),
      intersection_(intersection),
      degree_(degree) {}

PeelCertificate peel_certify(const BipartiteIncidenceGraph& g, const Rational& beta) {
  validate_beta(beta);
  const std::size_t n = g.right_size();
  std::vector<std::size_t> inter(n * n, 0);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t su = 0; su < sn; ++su) {
    const auto u = static_cast<std::size_t>(su);
    for (std::size_t v = u + 1; v < n; ++v) {
      inter[u * n + v] = intersection_size(g.neighbors(u), g.neighbors(v));
    }
  }
  return peel(g, beta, [&](Index u, Index v) { return inter[std::size_t{u} * n + v]; });
}

PeelCertificate peel_certify_serial(const BipartiteIncidenceGraph& g, const Rational& beta) {
  return peel(g, beta,
              [&](Index u, Index v) { return intersection_size(g.neighbors(u), g.neighbors(v)); });
}

}  // namespace nondeg
