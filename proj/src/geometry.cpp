#include "nondeg/geometry.hpp"

#include <string>
#include <utility>

namespace nondeg {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each
// pivot row.
std::vector<std::size_t> row_reduce(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < a[row].size(); ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix difference_rows(std::span<const RationalPoint> pts) {
  Matrix rows;
  rows.reserve(pts.size() > 0 ? pts.size() - 1 : 0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(pts[0].dim());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = pts[i][k] - pts[0][k];
    rows.push_back(std::move(r));
  }
  return rows;
}

void require_uniform_dim(std::span<const RationalPoint> pts) {
  for (const auto& p : pts) require_same_dim(p, pts[0].dim(), "point list");
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("point dimension must be positive");
}

RationalPoint::RationalPoint(std::initializer_list<Rational> coords)
    : RationalPoint(std::vector<Rational>(coords)) {}

Hyperplane::Hyperplane(std::vector<Rational> normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  std::size_t lead = 0;
  while (lead < normal_.size() && normal_[lead] == 0) ++lead;
  if (lead == normal_.size()) throw InvalidArgument("hyperplane normal is the zero vector");
  const Rational scale = 1 / normal_[lead];
  for (auto& c : normal_) c *= scale;
  offset_ *= scale;
}

Sphere::Sphere(RationalPoint center, Rational sq_radius)
    : center_(std::move(center)), sq_radius_(std::move(sq_radius)) {
  if (sq_radius_ <= 0) throw InvalidArgument("sphere squared radius must be positive");
}

EmptyOrbit::EmptyOrbit(bool tangent, RationalPoint foot)
    : Error("EmptyOrbit", tangent ? "spheres are tangent at a single point"
                                  : "spheres do not intersect"),
      tangent_(tangent),
      foot_(std::move(foot)) {}

void require_same_dim(const RationalPoint& p, std::size_t dim, const char* what) {
  if (p.dim() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                            ", got " + std::to_string(p.dim()));
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational squared_distance(const RationalPoint& p, const RationalPoint& q) {
  require_same_dim(q, p.dim(), "squared_distance");
  Rational s = 0;
  Rational diff;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff = p[i] - q[i];
    s += diff * diff;
  }
  return s;
}

bool on_sphere(const RationalPoint& p, const Sphere& s) {
  require_same_dim(p, s.dim(), "on_sphere");
  return squared_distance(p, s.center()) == s.sq_radius();
}

bool on_hyperplane(const RationalPoint& p, const Hyperplane& h) {
  require_same_dim(p, h.dim(), "on_hyperplane");
  return dot(h.normal(), p.coords()) == h.offset();
}

bool on_carried_sphere(const RationalPoint& p, const CarriedSphere& s) {
  return on_hyperplane(p, s.carrier) && on_sphere(p, s.sphere);
}

int affine_rank(std::span<const RationalPoint> pts) {
  if (pts.empty()) throw InvalidArgument("affine_rank of an empty point list");
  require_uniform_dim(pts);
  Matrix rows = difference_rows(pts);
  return static_cast<int>(row_reduce(rows, pts[0].dim()).size());
}

Hyperplane hyperplane_through(std::span<const RationalPoint> pts) {
  if (pts.empty()) throw InvalidArgument("hyperplane_through needs d points");
  const std::size_t d = pts[0].dim();
  if (pts.size() != d) {
    throw InvalidArgument("hyperplane_through needs exactly " + std::to_string(d) + " points, got " +
                          std::to_string(pts.size()));
  }
  require_uniform_dim(pts);
  Matrix rows = difference_rows(pts);
  const auto pivots = row_reduce(rows, d);
  if (pivots.size() + 1 != d) throw DegenerateInput("points do not span a unique hyperplane");

  // The null space is one-dimensional: set the free variable to 1.
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;
  std::vector<Rational> normal(d);
  normal[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) normal[pivots[r]] = -rows[r][free_col];
  Rational offset = dot(normal, pts[0].coords());
  return Hyperplane(std::move(normal), std::move(offset));
}

Sphere circumsphere(std::span<const RationalPoint> pts) {
  if (pts.empty()) throw InvalidArgument("circumsphere needs d+1 points");
  const std::size_t d = pts[0].dim();
  if (pts.size() != d + 1) {
    throw InvalidArgument("circumsphere needs exactly " + std::to_string(d + 1) + " points, got " +
                          std::to_string(pts.size()));
  }
  require_uniform_dim(pts);
  const Rational base_sq = dot(pts[0].coords(), pts[0].coords());
  Matrix aug(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    const auto& p = pts[i + 1];
    for (std::size_t k = 0; k < d; ++k) aug[i][k] = 2 * (p[k] - pts[0][k]);
    aug[i][d] = dot(p.coords(), p.coords()) - base_sq;
  }
  const auto pivots = row_reduce(aug, d);
  if (pivots.size() != d) throw DegenerateInput("points lie on a common hyperplane");
  std::vector<Rational> center(d);
  for (std::size_t i = 0; i < d; ++i) center[pivots[i]] = aug[i][d];
  RationalPoint c(std::move(center));
  Rational r2 = squared_distance(c, pts[0]);
  return Sphere(std::move(c), std::move(r2));
}

RationalPoint lift_point(const RationalPoint& p) {
  std::vector<Rational> coords(p.coords().begin(), p.coords().end());
  coords.push_back(dot(p.coords(), p.coords()));
  return RationalPoint(std::move(coords));
}

Hyperplane lift_sphere(const Sphere& s) {
  const auto& c = s.center();
  std::vector<Rational> normal;
  normal.reserve(c.dim() + 1);
  for (const auto& x : c.coords()) normal.push_back(2 * x);
  normal.push_back(-1);
  return Hyperplane(std::move(normal), dot(c.coords(), c.coords()) - s.sq_radius());
}

CarriedSphere sphere_sphere_orbit(const RationalPoint& a, const RationalPoint& b,
                                  const Rational& ra2, const Rational& rb2) {
  require_same_dim(b, a.dim(), "sphere_sphere_orbit");
  if (a == b) throw IdenticalCenters("sphere centers coincide");
  if (ra2 <= 0 || rb2 <= 0) throw InvalidArgument("squared radii must be positive");

  const std::size_t d = a.dim();
  std::vector<Rational> normal(d);
  for (std::size_t k = 0; k < d; ++k) normal[k] = 2 * (b[k] - a[k]);
  const Rational offset = dot(b.coords(), b.coords()) - dot(a.coords(), a.coords()) + ra2 - rb2;

  // Foot of a on the carrier: a + t n with t = (offset - n.a) / |n|^2.
  const Rational nn = dot(normal, normal);
  const Rational t = (offset - dot(normal, a.coords())) / nn;
  std::vector<Rational> foot(d);
  for (std::size_t k = 0; k < d; ++k) foot[k] = a[k] + t * normal[k];
  const Rational sq_radius = ra2 - t * t * nn;
  if (sq_radius <= 0) throw EmptyOrbit(sq_radius == 0, RationalPoint(std::move(foot)));
  return CarriedSphere{Sphere(RationalPoint(std::move(foot)), sq_radius),
                       Hyperplane(std::move(normal), offset)};
}

}  // namespace nondeg
