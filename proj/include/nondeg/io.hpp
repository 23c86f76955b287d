#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nondeg/geometry.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/setsystem.hpp"

// Line-oriented ASCII formats. Lines starting with '#' are comments; a
// `# seed: N` comment is kept as metadata and written back after the header
// line, so parse -> write reproduces writer output byte for byte.
//
//   points      dim d            then d rationals per line
//   spheres     dim d            then d rationals ; sq_radius
//   hyperplanes dim d            then d normal rationals ; offset
//   graph       m n              then edges `i j`, lexicographic
//   sets        ground g         then one sorted set per line (blank = empty)

namespace nondeg {

struct PointFile {
  std::size_t dim = 0;
  PointSet points;
  std::optional<std::uint64_t> seed;
};

struct SphereFile {
  std::size_t dim = 0;
  std::vector<Sphere> spheres;
  std::optional<std::uint64_t> seed;
};

struct HyperplaneFile {
  std::size_t dim = 0;
  std::vector<Hyperplane> planes;
  std::optional<std::uint64_t> seed;
};

struct GraphFile {
  BipartiteIncidenceGraph graph;
  std::optional<std::uint64_t> seed;
};

struct SetSystemFile {
  SetSystem system;
  std::optional<std::uint64_t> seed;
};

PointFile read_points(std::istream& in);
SphereFile read_spheres(std::istream& in);
HyperplaneFile read_hyperplanes(std::istream& in);
GraphFile read_graph(std::istream& in);
SetSystemFile read_set_system(std::istream& in);

void write_points(std::ostream& out, const PointFile& f);
void write_spheres(std::ostream& out, const SphereFile& f);
void write_hyperplanes(std::ostream& out, const HyperplaneFile& f);
void write_graph(std::ostream& out, const GraphFile& f);
void write_set_system(std::ostream& out, const SetSystemFile& f);

/// `verdict true|false`, then `q q' inter deg` per witness.
void write_report(std::ostream& out, const NondegeneracyReport& r);

/// `q1 q2 setminus num/den` per step, `final_degree k`, `bound num/den`.
void write_certificate(std::ostream& out, const PeelCertificate& c);

PointFile load_points(const std::string& path);
SphereFile load_spheres(const std::string& path);
HyperplaneFile load_hyperplanes(const std::string& path);
GraphFile load_graph(const std::string& path);
SetSystemFile load_set_system(const std::string& path);

}  // namespace nondeg
