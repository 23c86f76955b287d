#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nondeg/rational.hpp"

namespace nondeg {

/// ~332-bit MPFR float; bound values carry at least 50 significant digits.
using HighReal = boost::multiprecision::mpfr_float_100;

enum class BoundKind {
  elekes_toth,       // (mn)^{d/(d+1)} + m n^{1-1/(d-1)}, d >= 2
  lifting,           // (mn)^{(d+1)/(d+2)} + m n^{1-1/d}, d >= 1
  apfelbaum_sharir,  // m^{8/11} n^{9/11} + m n^{1/2}
  projected_sphere,  // m^{8/11} n^{9/11} + m n^{1/2} + n
  vc,                // m n^{1-1/d} + n, d >= 1
  semi_algebraic,    // m n^{1-1/d2} + n, d2 >= 1
  r4_spheres,        // m^{15/19} n^{16/19} + m n^{2/3} + n
  simtri_r4,         // n^{2+4/11}
};

/// A bound with epsilon = 0 and unit constant. `d` is the ambient
/// dimension, VC dimension or d2 depending on the kind.
struct BoundFormula {
  BoundKind kind;
  std::optional<int> d;
};

/// One summand m^{m_exp} n^{n_exp}.
struct BoundTerm {
  Rational m_exp;
  Rational n_exp;
};

std::string_view kind_name(BoundKind kind);
/// Throws InvalidArgument for unknown names.
BoundKind parse_kind(std::string_view name);
/// `kind` or `kind[d=D]`.
std::string describe(const BoundFormula& f);

/// Throws MissingParams when the kind needs `d` and it is absent or out of
/// range.
std::vector<BoundTerm> terms(const BoundFormula& f);

/// Each term is the exact integer m^{a q} n^{b q} followed by one q-th root
/// (q the common exponent denominator), rounded upward; the sum is rounded
/// upward too.
HighReal evaluate_term(const BoundTerm& t, std::uint64_t m, std::uint64_t n);
HighReal evaluate(const BoundFormula& f, std::uint64_t m, std::uint64_t n);

/// Index of the largest term, ties to the earliest, decided exactly.
std::size_t dominant_term(const BoundFormula& f, std::uint64_t m, std::uint64_t n);

struct RatioReport {
  BoundFormula formula;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t measured = 0;
  HighReal bound_value;
  HighReal ratio;
};

RatioReport ratio_report(std::uint64_t measured, const BoundFormula& f, std::uint64_t m,
                         std::uint64_t n);

/// Fixed-digit scientific rendering.
std::string format_real(const HighReal& x, int digits = 40);

inline constexpr std::string_view kRatioCsvHeader = "kind,m,n,measured,bound,ratio";
std::string to_csv_row(const RatioReport& r);

}  // namespace nondeg
