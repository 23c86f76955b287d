// Command-line entry point: generators, checkers, counters and bound reports
// over the shared text formats.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nondeg/bounds.hpp"
#include "nondeg/constructions.hpp"
#include "nondeg/error.hpp"
#include "nondeg/geometry.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/io.hpp"
#include "nondeg/rational.hpp"
#include "nondeg/setsystem.hpp"
#include "nondeg/simtri.hpp"

using namespace nondeg;

namespace {

const CLI::Validator kRationalCheck(
    [](std::string& s) -> std::string {
      try {
        parse_rational(s);
        return {};
      } catch (const ParseError& e) {
        return "expected a rational p/q or an integer, got '" + s + "'";
      }
    },
    "RATIONAL");

const CLI::Validator kRationalListCheck(
    [](std::string& s) -> std::string {
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          parse_rational(item);
        } catch (const ParseError&) {
          return "expected comma-separated rationals, got '" + s + "'";
        }
      }
      return {};
    },
    "R1,R2,...");

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

// Writes to --out when given, else to stdout.
void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
  writer(f);
}

void print_config(const CLI::App* leaf) {
  std::vector<const CLI::App*> chain;
  for (auto* a = leaf; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) {
    chain.insert(chain.begin(), a);
  }
  std::string command;
  for (const auto* a : chain) command += (command.empty() ? "" : " ") + a->get_name();
  std::cout << "# command = " << command << '\n';
  for (const auto* opt : leaf->get_options()) {
    const auto name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      for (std::size_t i = 0; i < r.size(); ++i) value += (i > 0 ? "," : "") + r[i];
      if (r.empty()) value = "true";
    } else if (!opt->get_default_str().empty()) {
      value = opt->get_default_str();
    } else {
      continue;
    }
    std::cout << "# " << name << " = " << value << '\n';
  }
}

struct Options {
  std::string out;
  std::string points;
  std::string spheres;
  std::string planes;
  std::string graph;
  std::string sets;
  std::string sphere_out;
  std::string beta;
  std::string center;
  std::string sq_radius = "1";
  std::string shape;
  std::string algo = "orbit";
  std::string kind;
  std::string side = "left";
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t dim = 0;
  std::uint64_t bound = 0;
  std::size_t k = 0;
  std::size_t section = 0;
  std::size_t off = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t z = 0;
  std::size_t witness_cap = kDefaultWitnessCap;
  std::size_t ground_cap = kDefaultVcCap;
  std::uint64_t budget = kDefaultShatterBudget;
  std::uint64_t measured = 0;
  std::optional<int> d;
  bool ordered = false;
  bool pairs = false;
  bool count_only = false;
};

PointSet require_dim(PointFile f, std::size_t dim) {
  if (f.dim != dim) {
    throw DimensionMismatch("points have dimension " + std::to_string(f.dim) + ", objects " +
                            std::to_string(dim));
  }
  return std::move(f.points);
}

BipartiteIncidenceGraph incidence_from_files(const Options& o) {
  const auto pf = load_points(o.points);
  if (!o.spheres.empty()) {
    const auto sf = load_spheres(o.spheres);
    return build_incidence(require_dim(pf, sf.dim), sf.spheres);
  }
  const auto hf = load_hyperplanes(o.planes);
  return build_incidence(require_dim(pf, hf.dim), hf.planes);
}

void add_object_flags(CLI::App* sub, Options& o) {
  auto* s = sub->add_option("--spheres", o.spheres, "sphere file")->check(CLI::ExistingFile);
  auto* h = sub->add_option("--planes", o.planes, "hyperplane file")->check(CLI::ExistingFile);
  s->excludes(h);
  h->excludes(s);
}

void print_report(const NondegeneracyReport& r) {
  write_report(std::cout, r);
  if (r.total_violations > r.witnesses.size()) {
    std::cout << "# witnesses truncated: " << r.witnesses.size() << " of " << r.total_violations
              << '\n';
  }
}

// Per-object geometric check: `verdict`, then `object i` for every failure.
template <typename Object, typename Check>
void print_geometric(const std::vector<Object>& objects, Check check) {
  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!check(objects[i])) failing.push_back(i);
  }
  std::cout << "verdict " << (failing.empty() ? "true" : "false") << '\n';
  for (const auto i : failing) std::cout << "object " << i << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence and nondegeneracy toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generators")->require_subcommand(1);

  auto* gen_points = gen->add_subcommand("points", "distinct integer points in a box");
  gen_points->add_option("--count", o.count)->required();
  gen_points->add_option("--dim", o.dim)->required()->check(CLI::PositiveNumber);
  gen_points->add_option("--bound", o.bound, "coordinate bound")->required();
  gen_points->add_option("--seed", o.seed)->required();
  gen_points->add_option("--out", o.out);

  auto* gen_onsphere = gen->add_subcommand("onsphere", "rational points on a sphere");
  gen_onsphere->add_option("--count", o.count)->required();
  gen_onsphere->add_option("--dim", o.dim)->required()->check(CLI::Range(2, 64));
  gen_onsphere->add_option("--center", o.center, "comma-separated, default origin")
      ->check(kRationalListCheck);
  gen_onsphere->add_option("--sq-radius", o.sq_radius)->check(kRationalCheck)
      ->capture_default_str();
  gen_onsphere->add_option("--seed", o.seed)->required();
  gen_onsphere->add_option("--out", o.out);

  auto* gen_spheres = gen->add_subcommand("spheres", "circumspheres of random point subsets");
  gen_spheres->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
  gen_spheres->add_option("--k", o.k)->required();
  gen_spheres->add_option("--seed", o.seed)->required();
  gen_spheres->add_option("--out", o.out);

  auto* gen_cluster = gen->add_subcommand("cluster", "cospherical points rich on one section");
  gen_cluster->add_option("--dim", o.dim)->required();
  gen_cluster->add_option("--circle", o.section, "points on the section")->required();
  gen_cluster->add_option("--off", o.off, "points off the section")->required();
  gen_cluster->add_option("--seed", o.seed)->required();
  gen_cluster->add_option("--out", o.out);
  gen_cluster->add_option("--sphere-out", o.sphere_out, "also write the common sphere");

  auto* gen_graph = gen->add_subcommand("graph-thm1", "random dense nondegenerate graph");
  gen_graph->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  gen_graph->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  gen_graph->add_option("--beta", o.beta)->required()->check(kRationalCheck);
  gen_graph->add_option("--seed", o.seed)->required();
  gen_graph->add_option("--out", o.out);

  auto* inc = app.add_subcommand("incidence", "point-object incidences")->require_subcommand(1);
  auto* inc_count = inc->add_subcommand("count", "number of incidences");
  auto* inc_build = inc->add_subcommand("build", "incidence graph");
  for (auto* sub : {inc_count, inc_build}) {
    sub->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
    add_object_flags(sub, o);
  }
  inc_build->add_option("--out", o.out);

  auto* check = app.add_subcommand("check", "nondegeneracy checks")->require_subcommand(1);
  auto* check_nd = check->add_subcommand("nondeg", "graph nondegeneracy over Q");
  auto* check_dual = check->add_subcommand("dual-nondeg", "graph nondegeneracy over P");
  for (auto* sub : {check_nd, check_dual}) {
    sub->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
    sub->add_option("--beta", o.beta)->required()->check(kRationalCheck);
    sub->add_option("--witness-cap", o.witness_cap)->capture_default_str();
  }
  auto* check_geo_s = check->add_subcommand("geo-sphere", "geometric nondegeneracy of spheres");
  auto* check_geo_h = check->add_subcommand("geo-plane", "geometric nondegeneracy of hyperplanes");
  check_geo_s->add_option("--spheres", o.spheres)->required()->check(CLI::ExistingFile);
  check_geo_h->add_option("--planes", o.planes)->required()->check(CLI::ExistingFile);
  for (auto* sub : {check_geo_s, check_geo_h}) {
    sub->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
    sub->add_option("--beta", o.beta)->required()->check(kRationalCheck);
  }

  auto* span = app.add_subcommand("spanning", "objects spanned by the points")
                   ->require_subcommand(1);
  auto* span_planes = span->add_subcommand("planes", "spanning hyperplanes");
  auto* span_spheres = span->add_subcommand("spheres", "spanning spheres");
  for (auto* sub : {span_planes, span_spheres}) {
    sub->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
    sub->add_flag("--count", o.count_only, "print only the number of objects");
    sub->add_option("--out", o.out);
  }

  auto* vcdim = app.add_subcommand("vcdim", "exact VC dimension");
  auto* vc_sets = vcdim->add_option("--sets", o.sets)->check(CLI::ExistingFile);
  auto* vc_graph = vcdim->add_option("--graph", o.graph)->check(CLI::ExistingFile);
  vc_sets->excludes(vc_graph);
  vcdim->add_option("--side", o.side, "left: {N(q)} over P, right: {N(p)} over Q")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  vcdim->add_option("--cap", o.ground_cap, "largest ground set")->capture_default_str();

  auto* shatter = app.add_subcommand("shatter", "shatter function value");
  shatter->add_option("--sets", o.sets)->required()->check(CLI::ExistingFile);
  shatter->add_option("--z", o.z)->required();
  shatter->add_option("--budget", o.budget)->capture_default_str();

  auto* peel = app.add_subcommand("peel", "peel certificate for the edge count");
  peel->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  peel->add_option("--beta", o.beta)->required()->check(kRationalCheck);
  peel->add_option("--out", o.out);

  auto* simtri = app.add_subcommand("simtri", "count triangles similar to a shape");
  simtri->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
  simtri->add_option("--shape", o.shape, "squared sides L2,s2,s3")->required()
      ->check(kRationalListCheck);
  simtri->add_option("--algo", o.algo)->check(CLI::IsMember({"brute", "orbit"}))
      ->capture_default_str();
  simtri->add_flag("--ordered", o.ordered, "print the role-labeled triple count");
  simtri->add_flag("--pairs", o.pairs, "per-pair breakdown (orbit only)");

  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds->add_option("--kind", o.kind)->required();
  bounds->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--d", o.d);

  auto* report = app.add_subcommand("report", "experiment reports")->require_subcommand(1);
  auto* report_ratio = report->add_subcommand("ratio", "measured / bound as CSV");
  report_ratio->add_option("--kind", o.kind)->required();
  report_ratio->add_option("--d", o.d);
  auto* r_measured = report_ratio->add_option("--measured", o.measured);
  auto* r_m = report_ratio->add_option("--m", o.m)->check(CLI::PositiveNumber);
  auto* r_n = report_ratio->add_option("--n", o.n)->check(CLI::PositiveNumber);
  auto* r_points = report_ratio->add_option("--points", o.points)->check(CLI::ExistingFile);
  add_object_flags(report_ratio, o);
  r_measured->needs(r_m)->needs(r_n)->excludes(r_points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Cross-flag requirements CLI11 cannot express directly.
  auto usage = [](const std::string& msg) {
    std::cerr << "usage error: " << msg << '\n';
    return 2;
  };
  if (inc_count->parsed() || inc_build->parsed()) {
    if (o.spheres.empty() && o.planes.empty()) return usage("--spheres or --planes is required");
  }
  if (vcdim->parsed() && o.sets.empty() && o.graph.empty()) {
    return usage("--sets or --graph is required");
  }
  if (report_ratio->parsed()) {
    const bool from_files = !o.points.empty();
    if (from_files && o.spheres.empty() && o.planes.empty()) {
      return usage("--points needs --spheres or --planes");
    }
    if (!from_files && r_measured->count() == 0) {
      return usage("--measured with --m and --n, or --points with objects, is required");
    }
  }

  const CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
  print_config(leaf);

  try {
    if (gen_points->parsed()) {
      const auto pts = gen_random_points(o.count, o.dim, o.bound, Seed{o.seed});
      emit(o.out, [&](std::ostream& os) { write_points(os, {o.dim, pts, o.seed}); });
    } else if (gen_onsphere->parsed()) {
      std::vector<Rational> c =
          o.center.empty() ? std::vector<Rational>(o.dim, Rational(0)) : parse_list(o.center);
      if (c.size() != o.dim) throw DimensionMismatch("--center must have --dim coordinates");
      const Sphere s(RationalPoint(std::move(c)), parse_rational(o.sq_radius));
      const auto pts = gen_points_on_sphere(o.count, s, Seed{o.seed});
      emit(o.out, [&](std::ostream& os) { write_points(os, {o.dim, pts, o.seed}); });
    } else if (gen_spheres->parsed()) {
      const auto pf = load_points(o.points);
      const auto family = gen_sphere_family(pf.points, o.k, Seed{o.seed});
      emit(o.out, [&](std::ostream& os) { write_spheres(os, {pf.dim, family, o.seed}); });
    } else if (gen_cluster->parsed()) {
      const auto cl = gen_degenerate_cluster(o.dim, o.section, o.off, Seed{o.seed});
      std::cout << "# section_count = " << cl.section_count << '\n';
      emit(o.out, [&](std::ostream& os) { write_points(os, {o.dim, cl.points, o.seed}); });
      if (!o.sphere_out.empty()) {
        emit(o.sphere_out, [&](std::ostream& os) {
          write_spheres(os, {o.dim, {cl.sphere}, o.seed});
        });
      }
    } else if (gen_graph->parsed()) {
      const auto r = random_dense_graph(o.m, o.n, parse_rational(o.beta), Seed{o.seed});
      std::cout << "# rho = " << to_string(r.rho) << '\n'
                << "# edges = " << r.graph.edge_count() << '\n'
                << "# min_degree = " << r.min_degree << '\n'
                << "# max_pair_intersection = " << r.max_pair_intersection << '\n'
                << "# passed = " << (r.passed ? "true" : "false") << '\n';
      emit(o.out, [&](std::ostream& os) { write_graph(os, {r.graph, o.seed}); });
    } else if (inc_count->parsed()) {
      std::cout << incidence_from_files(o).edge_count() << '\n';
    } else if (inc_build->parsed()) {
      const auto g = incidence_from_files(o);
      emit(o.out, [&](std::ostream& os) { write_graph(os, {g, std::nullopt}); });
    } else if (check_nd->parsed()) {
      print_report(
          check_nondegenerate(load_graph(o.graph).graph, parse_rational(o.beta), o.witness_cap));
    } else if (check_dual->parsed()) {
      print_report(check_dually_nondegenerate(load_graph(o.graph).graph, parse_rational(o.beta),
                                              o.witness_cap));
    } else if (check_geo_s->parsed()) {
      const auto sf = load_spheres(o.spheres);
      const auto pts = require_dim(load_points(o.points), sf.dim);
      const auto beta = parse_rational(o.beta);
      validate_beta(beta);
      print_geometric(sf.spheres, [&](const Sphere& s) {
        return geometric_nondegeneracy_sphere(pts, s, beta);
      });
    } else if (check_geo_h->parsed()) {
      const auto hf = load_hyperplanes(o.planes);
      const auto pts = require_dim(load_points(o.points), hf.dim);
      const auto beta = parse_rational(o.beta);
      validate_beta(beta);
      print_geometric(hf.planes, [&](const Hyperplane& h) {
        return geometric_nondegeneracy_hyperplane(pts, h, beta);
      });
    } else if (span_planes->parsed()) {
      const auto pf = load_points(o.points);
      if (o.count_only) {
        std::cout << count_spanning_hyperplanes(pf.points) << '\n';
      } else {
        const auto hs = spanning_hyperplanes(pf.points);
        emit(o.out, [&](std::ostream& os) { write_hyperplanes(os, {pf.dim, hs, std::nullopt}); });
      }
    } else if (span_spheres->parsed()) {
      const auto pf = load_points(o.points);
      if (o.count_only) {
        std::cout << count_spanning_spheres(pf.points) << '\n';
      } else {
        const auto ss = spanning_spheres(pf.points);
        emit(o.out, [&](std::ostream& os) { write_spheres(os, {pf.dim, ss, std::nullopt}); });
      }
    } else if (vcdim->parsed()) {
      SetSystem f;
      if (!o.sets.empty()) {
        f = load_set_system(o.sets).system;
      } else {
        const auto g = load_graph(o.graph).graph;
        f = o.side == "left" ? left_system(g) : right_system(g);
      }
      std::cout << vc_dimension(f, o.ground_cap) << '\n';
    } else if (shatter->parsed()) {
      std::cout << shatter_function(load_set_system(o.sets).system, o.z, o.budget) << '\n';
    } else if (peel->parsed()) {
      const auto g = load_graph(o.graph).graph;
      const auto cert = peel_certify(g, parse_rational(o.beta));
      std::cout << "# edges = " << g.edge_count() << '\n';
      emit(o.out, [&](std::ostream& os) { write_certificate(os, cert); });
    } else if (simtri->parsed()) {
      const auto sides = parse_list(o.shape);
      if (sides.size() != 3) throw InvalidArgument("--shape needs three squared side lengths");
      const TriangleShape shape(sides[0], sides[1], sides[2]);
      const auto pts = load_points(o.points).points;
      if (o.algo == "brute") {
        if (o.pairs) throw InvalidArgument("--pairs needs --algo orbit");
        const auto c = count_similar_brute(pts, shape);
        std::cout << (o.ordered ? c * shape.automorphisms() : c) << '\n';
      } else {
        const auto r = count_similar_orbit(pts, shape, o.pairs);
        std::cout << (o.ordered ? r.ordered : r.triangles) << '\n';
        for (const auto& p : r.pairs) std::cout << "pair " << p.a << ' ' << p.b << ' ' << p.count << '\n';
      }
    } else if (bounds->parsed()) {
      const BoundFormula f{parse_kind(o.kind), o.d};
      std::cout << format_real(evaluate(f, o.m, o.n)) << '\n'
                << "dominant_term " << dominant_term(f, o.m, o.n) << '\n';
    } else if (report_ratio->parsed()) {
      const BoundFormula f{parse_kind(o.kind), o.d};
      std::uint64_t measured = o.measured;
      std::uint64_t m = o.m;
      std::uint64_t n = o.n;
      if (!o.points.empty()) {
        const auto g = incidence_from_files(o);
        measured = g.edge_count();
        m = g.left_size();
        n = g.right_size();
        if (m == 0 || n == 0) throw InvalidArgument("empty point or object file");
      }
      std::cout << kRatioCsvHeader << '\n' << to_csv_row(ratio_report(measured, f, m, n)) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
