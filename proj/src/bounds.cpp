#include "nondeg/bounds.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "nondeg/error.hpp"

namespace nondeg {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 8> kNames{{
    {BoundKind::elekes_toth, "elekes_toth"},
    {BoundKind::lifting, "lifting"},
    {BoundKind::apfelbaum_sharir, "apfelbaum_sharir"},
    {BoundKind::projected_sphere, "projected_sphere"},
    {BoundKind::vc, "vc"},
    {BoundKind::semi_algebraic, "semi_algebraic"},
    {BoundKind::r4_spheres, "r4_spheres"},
    {BoundKind::simtri_r4, "simtri_r4"},
}};

int require_d(const BoundFormula& f, int min) {
  if (!f.d) throw MissingParams(std::string(kind_name(f.kind)) + " needs parameter d");
  if (*f.d < min) {
    throw MissingParams(std::string(kind_name(f.kind)) + " needs d >= " + std::to_string(min));
  }
  return *f.d;
}

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void require_sizes(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("bounds need m, n >= 1");
}

Integer power(std::uint64_t base, const Integer& exp) {
  Integer b(std::to_string(base));
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp.get_ui());
  return out;
}

// m^{a L} n^{b L} for a common multiple L of the exponent denominators.
Integer raised(const BoundTerm& t, const Integer& l, std::uint64_t m, std::uint64_t n) {
  const Integer ea = t.m_exp.get_num() * (l / t.m_exp.get_den());
  const Integer eb = t.n_exp.get_num() * (l / t.n_exp.get_den());
  return power(m, ea) * power(n, eb);
}

}  // namespace

std::string_view kind_name(BoundKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

BoundKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw InvalidArgument("unknown bound kind '" + std::string(name) + "'");
}

std::string describe(const BoundFormula& f) {
  std::string out(kind_name(f.kind));
  if (f.d) out += "[d=" + std::to_string(*f.d) + "]";
  return out;
}

std::vector<BoundTerm> terms(const BoundFormula& f) {
  switch (f.kind) {
    case BoundKind::elekes_toth: {
      const long d = require_d(f, 2);
      return {{q(d, d + 1), q(d, d + 1)}, {1, 1 - q(1, d - 1)}};
    }
    case BoundKind::lifting: {
      const long d = require_d(f, 1);
      return {{q(d + 1, d + 2), q(d + 1, d + 2)}, {1, 1 - q(1, d)}};
    }
    case BoundKind::apfelbaum_sharir:
      return {{q(8, 11), q(9, 11)}, {1, q(1, 2)}};
    case BoundKind::projected_sphere:
      return {{q(8, 11), q(9, 11)}, {1, q(1, 2)}, {0, 1}};
    case BoundKind::vc:
    case BoundKind::semi_algebraic: {
      const long d = require_d(f, 1);
      return {{1, 1 - q(1, d)}, {0, 1}};
    }
    case BoundKind::r4_spheres:
      return {{q(15, 19), q(16, 19)}, {1, q(2, 3)}, {0, 1}};
    case BoundKind::simtri_r4:
      return {{0, 2 + q(4, 11)}};
  }
  throw InternalError("unhandled bound kind");
}

HighReal evaluate_term(const BoundTerm& t, std::uint64_t m, std::uint64_t n) {
  require_sizes(m, n);
  Integer l;
  mpz_lcm(l.get_mpz_t(), t.m_exp.get_den_mpz_t(), t.n_exp.get_den_mpz_t());
  const Integer x = raised(t, l, m, n);
  HighReal out;
  mpfr_set_z(out.backend().data(), x.get_mpz_t(), MPFR_RNDU);
  mpfr_rootn_ui(out.backend().data(), out.backend().data(), l.get_ui(), MPFR_RNDU);
  return out;
}

HighReal evaluate(const BoundFormula& f, std::uint64_t m, std::uint64_t n) {
  HighReal sum = 0;
  for (const auto& t : terms(f)) {
    const HighReal v = evaluate_term(t, m, n);
    mpfr_add(sum.backend().data(), sum.backend().data(), v.backend().data(), MPFR_RNDU);
  }
  return sum;
}

std::size_t dominant_term(const BoundFormula& f, std::uint64_t m, std::uint64_t n) {
  require_sizes(m, n);
  const auto ts = terms(f);
  Integer l = 1;
  for (const auto& t : ts) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.m_exp.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.n_exp.get_den_mpz_t());
  }
  std::size_t best = 0;
  Integer best_value = raised(ts[0], l, m, n);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    Integer v = raised(ts[i], l, m, n);
    if (v > best_value) {
      best = i;
      best_value = std::move(v);
    }
  }
  return best;
}

RatioReport ratio_report(std::uint64_t measured, const BoundFormula& f, std::uint64_t m,
                         std::uint64_t n) {
  RatioReport r;
  r.formula = f;
  r.m = m;
  r.n = n;
  r.measured = measured;
  r.bound_value = evaluate(f, m, n);
  r.ratio = HighReal(measured) / r.bound_value;
  return r;
}

std::string format_real(const HighReal& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits) << x;
  return os.str();
}

std::string to_csv_row(const RatioReport& r) {
  return describe(r.formula) + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
         std::to_string(r.measured) + "," + format_real(r.bound_value) + "," + format_real(r.ratio);
}

}  // namespace nondeg
