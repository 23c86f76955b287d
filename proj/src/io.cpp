#include "nondeg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace nondeg {

namespace {

constexpr std::string_view kSeedTag = "# seed:";

// Reads lines, collecting the seed comment and dropping other comments.
class LineReader {
 public:
  LineReader(std::istream& in, bool keep_blank) : in_(in), keep_blank_(keep_blank) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') {
        if (line.rfind(kSeedTag, 0) == 0) seed_ = parse_u64(trim(line.substr(kSeedTag.size())));
        continue;
      }
      if (!keep_blank_ && trim(line).empty()) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(number_) + ": " + what);
  }

  std::optional<std::uint64_t> seed() const { return seed_; }

  static std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
  }

  std::uint64_t parse_u64(const std::string& s) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      fail("expected a non-negative integer, got '" + s + "'");
    }
    return v;
  }

 private:
  std::istream& in_;
  bool keep_blank_;
  std::size_t number_ = 0;
  std::optional<std::uint64_t> seed_;
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::vector<Rational> rationals(const LineReader& r, const std::string& text, std::size_t expect) {
  const auto toks = tokens(text);
  if (toks.size() != expect) {
    r.fail("expected " + std::to_string(expect) + " values, got " + std::to_string(toks.size()));
  }
  std::vector<Rational> out;
  out.reserve(expect);
  for (const auto& t : toks) {
    try {
      out.push_back(parse_rational(t));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
  }
  return out;
}

std::size_t read_dim_header(LineReader& r, const char* keyword) {
  std::string line;
  if (!r.next(line)) r.fail(std::string("missing '") + keyword + "' header");
  const auto toks = tokens(line);
  if (toks.size() != 2 || toks[0] != keyword) r.fail(std::string("expected '") + keyword + " N'");
  const auto v = r.parse_u64(toks[1]);
  return static_cast<std::size_t>(v);
}

// Splits `lhs ; rhs` and parses d + 1 rationals.
std::pair<std::vector<Rational>, Rational> split_semicolon(const LineReader& r,
                                                           const std::string& line,
                                                           std::size_t d) {
  const auto semi = line.find(';');
  if (semi == std::string::npos || line.find(';', semi + 1) != std::string::npos) {
    r.fail("expected exactly one ';'");
  }
  auto lhs = rationals(r, line.substr(0, semi), d);
  auto rhs = rationals(r, line.substr(semi + 1), 1);
  return {std::move(lhs), std::move(rhs[0])};
}

void write_seed(std::ostream& out, const std::optional<std::uint64_t>& seed) {
  if (seed) out << kSeedTag << ' ' << *seed << '\n';
}

void write_coords(std::ostream& out, std::span<const Rational> coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out << ' ';
    out << to_string(coords[i]);
  }
}

template <typename F, typename Reader>
F load(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return reader(in);
}

}  // namespace

PointFile read_points(std::istream& in) {
  LineReader r(in, false);
  PointFile f;
  f.dim = read_dim_header(r, "dim");
  if (f.dim == 0) r.fail("dimension must be positive");
  std::string line;
  while (r.next(line)) f.points.emplace_back(rationals(r, line, f.dim));
  f.seed = r.seed();
  return f;
}

SphereFile read_spheres(std::istream& in) {
  LineReader r(in, false);
  SphereFile f;
  f.dim = read_dim_header(r, "dim");
  if (f.dim == 0) r.fail("dimension must be positive");
  std::string line;
  while (r.next(line)) {
    auto [center, sq] = split_semicolon(r, line, f.dim);
    if (sq <= 0) r.fail("squared radius must be positive");
    f.spheres.emplace_back(RationalPoint(std::move(center)), std::move(sq));
  }
  f.seed = r.seed();
  return f;
}

HyperplaneFile read_hyperplanes(std::istream& in) {
  LineReader r(in, false);
  HyperplaneFile f;
  f.dim = read_dim_header(r, "dim");
  if (f.dim == 0) r.fail("dimension must be positive");
  std::string line;
  while (r.next(line)) {
    auto [normal, offset] = split_semicolon(r, line, f.dim);
    try {
      f.planes.emplace_back(std::move(normal), std::move(offset));
    } catch (const InvalidArgument& e) {
      r.fail(e.what());
    }
  }
  f.seed = r.seed();
  return f;
}

GraphFile read_graph(std::istream& in) {
  LineReader r(in, false);
  std::string line;
  if (!r.next(line)) r.fail("missing 'm n' header");
  auto head = tokens(line);
  if (head.size() != 2) r.fail("expected 'm n'");
  const auto m = r.parse_u64(head[0]);
  const auto n = r.parse_u64(head[1]);
  std::vector<std::pair<Index, Index>> edges;
  while (r.next(line)) {
    auto t = tokens(line);
    if (t.size() != 2) r.fail("expected an edge 'i j'");
    const auto i = r.parse_u64(t[0]);
    const auto j = r.parse_u64(t[1]);
    if (i >= m || j >= n) r.fail("edge endpoint out of range");
    edges.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  }
  GraphFile f;
  try {
    f.graph = BipartiteIncidenceGraph::from_edges(m, n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  f.seed = r.seed();
  return f;
}

SetSystemFile read_set_system(std::istream& in) {
  LineReader r(in, true);
  const auto ground = read_dim_header(r, "ground");
  std::vector<std::vector<Index>> sets;
  std::string line;
  while (r.next(line)) {
    std::vector<Index> s;
    for (const auto& t : tokens(line)) {
      const auto v = r.parse_u64(t);
      if (v >= ground) r.fail("element " + t + " outside the ground set");
      s.push_back(static_cast<Index>(v));
    }
    sets.push_back(std::move(s));
  }
  return SetSystemFile{SetSystem(ground, std::move(sets)), r.seed()};
}

void write_points(std::ostream& out, const PointFile& f) {
  out << "dim " << f.dim << '\n';
  write_seed(out, f.seed);
  for (const auto& p : f.points) {
    write_coords(out, p.coords());
    out << '\n';
  }
}

void write_spheres(std::ostream& out, const SphereFile& f) {
  out << "dim " << f.dim << '\n';
  write_seed(out, f.seed);
  for (const auto& s : f.spheres) {
    write_coords(out, s.center().coords());
    out << " ; " << to_string(s.sq_radius()) << '\n';
  }
}

void write_hyperplanes(std::ostream& out, const HyperplaneFile& f) {
  out << "dim " << f.dim << '\n';
  write_seed(out, f.seed);
  for (const auto& h : f.planes) {
    write_coords(out, h.normal());
    out << " ; " << to_string(h.offset()) << '\n';
  }
}

void write_graph(std::ostream& out, const GraphFile& f) {
  out << f.graph.left_size() << ' ' << f.graph.right_size() << '\n';
  write_seed(out, f.seed);
  for (const auto& [i, j] : f.graph.edges()) out << i << ' ' << j << '\n';
}

void write_set_system(std::ostream& out, const SetSystemFile& f) {
  out << "ground " << f.system.ground_size() << '\n';
  write_seed(out, f.seed);
  for (const auto& s : f.system.sets()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

void write_report(std::ostream& out, const NondegeneracyReport& r) {
  out << "verdict " << (r.verdict ? "true" : "false") << '\n';
  for (const auto& w : r.witnesses) {
    out << w.q << ' ' << w.other << ' ' << w.intersection << ' ' << w.degree << '\n';
  }
}

void write_certificate(std::ostream& out, const PeelCertificate& c) {
  for (const auto& s : c.steps) {
    out << s.peeled << ' ' << s.partner << ' ' << s.setminus << ' ' << to_fraction_string(s.charge)
        << '\n';
  }
  out << "final_degree " << c.final_degree << '\n';
  out << "bound " << to_fraction_string(c.certified_bound) << '\n';
}

PointFile load_points(const std::string& path) { return load<PointFile>(path, read_points); }
SphereFile load_spheres(const std::string& path) { return load<SphereFile>(path, read_spheres); }
HyperplaneFile load_hyperplanes(const std::string& path) {
  return load<HyperplaneFile>(path, read_hyperplanes);
}
GraphFile load_graph(const std::string& path) { return load<GraphFile>(path, read_graph); }
SetSystemFile load_set_system(const std::string& path) {
  return load<SetSystemFile>(path, read_set_system);
}

}  // namespace nondeg
