#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nondeg/error.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/rational.hpp"

namespace nondeg {

/// Finite multiset of subsets of [0, ground_size). Each set is kept sorted
/// and duplicate-free; the same set may appear more than once.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(std::size_t ground_size, std::vector<std::vector<Index>> sets);

  std::size_t ground_size() const noexcept { return ground_size_; }
  const std::vector<std::vector<Index>>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<std::vector<Index>> sets_;
};

inline constexpr std::size_t kDefaultVcCap = 24;
inline constexpr std::uint64_t kDefaultShatterBudget = 50'000'000;

/// Exact VC dimension, -1 for an empty system. Throws GroundTooLarge when
/// the ground set exceeds `ground_cap` (at most 64).
int vc_dimension(const SetSystem& f, std::size_t ground_cap = kDefaultVcCap);

/// max over z-subsets B of the number of distinct traces A ∩ B. Throws
/// BudgetExceeded when C(ground, z) * |F| exceeds `budget`.
std::uint64_t shatter_function(const SetSystem& f, std::size_t z,
                               std::uint64_t budget = kDefaultShatterBudget);

/// sum_{i=0}^{d} C(z, i).
Integer sauer_envelope(int d, std::size_t z);

/// {N(q)} over P and {N(p)} over Q.
SetSystem left_system(const BipartiteIncidenceGraph& g);
SetSystem right_system(const BipartiteIncidenceGraph& g);

std::pair<int, int> left_right_vc(const BipartiteIncidenceGraph& g,
                                  std::size_t ground_cap = kDefaultVcCap);

struct PeelStep {
  Index peeled;
  Index partner;
  std::size_t setminus;
  Rational charge;

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// Instance-specific edge bound from repeatedly peeling one vertex of the
/// pair with the smallest symmetric difference. Each peel charges
/// |N(q1) \ N(q2)| / (1 - beta), which dominates deg(q1) whenever q1 is
/// beta-nondegenerate against q2.
struct PeelCertificate {
  Rational beta;
  std::vector<PeelStep> steps;
  std::size_t final_degree = 0;
  Rational certified_bound;

  friend bool operator==(const PeelCertificate&, const PeelCertificate&) = default;
};

/// Raised when a peel charge falls below the peeled degree, i.e.
/// |N(q1) ∩ N(q2)| >= beta |N(q1)| at that stage.
class NotNondegenerate : public Error {
 public:
  NotNondegenerate(Index q, Index other, std::size_t intersection, std::size_t degree);

  Index q() const noexcept { return q_; }
  Index other() const noexcept { return other_; }
  std::size_t intersection() const noexcept { return intersection_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  Index q_;
  Index other_;
  std::size_t intersection_;
  std::size_t degree_;
};

/// Pair search over a cached intersection matrix (OpenMP fill); peeling
/// never changes surviving neighborhoods so the matrix stays valid.
PeelCertificate peel_certify(const BipartiteIncidenceGraph& g, const Rational& beta);

/// Reference version recomputing every surviving pair at every step.
PeelCertificate peel_certify_serial(const BipartiteIncidenceGraph& g, const Rational& beta);

}  // namespace nondeg
