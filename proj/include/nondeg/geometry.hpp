#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nondeg/error.hpp"
#include "nondeg/rational.hpp"

namespace nondeg {

/// A point of Q^d with exact coordinates.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords);
  RationalPoint(std::initializer_list<Rational> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

using PointSet = std::vector<RationalPoint>;

/// Hyperplane `normal . x = offset`. The constructor rescales so that the
/// first nonzero normal entry is 1, so equal hyperplanes compare equal.
class Hyperplane {
 public:
  Hyperplane(std::vector<Rational> normal, Rational offset);

  std::size_t dim() const noexcept { return normal_.size(); }
  std::span<const Rational> normal() const noexcept { return normal_; }
  const Rational& offset() const noexcept { return offset_; }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.offset_ == b.offset_ && a.normal_ == b.normal_;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal_ != b.normal_) return a.normal_ < b.normal_;
    return a.offset_ < b.offset_;
  }

 private:
  std::vector<Rational> normal_;
  Rational offset_;
};

/// (d-1)-sphere stored as center and squared radius; sq_radius > 0.
class Sphere {
 public:
  Sphere(RationalPoint center, Rational sq_radius);

  std::size_t dim() const noexcept { return center_.dim(); }
  const RationalPoint& center() const noexcept { return center_; }
  const Rational& sq_radius() const noexcept { return sq_radius_; }

  friend bool operator==(const Sphere& a, const Sphere& b) {
    return a.sq_radius_ == b.sq_radius_ && a.center_ == b.center_;
  }
  friend bool operator<(const Sphere& a, const Sphere& b) {
    if (!(a.center_ == b.center_)) return a.center_ < b.center_;
    return a.sq_radius_ < b.sq_radius_;
  }

 private:
  RationalPoint center_;
  Rational sq_radius_;
};

/// A (d-2)-sphere in R^d: the intersection of `sphere` with `carrier`,
/// whose center lies on the carrier.
struct CarriedSphere {
  Sphere sphere;
  Hyperplane carrier;
};

/// Two spheres meet in at most one point. `tangent()` distinguishes a single
/// touching point (returned as `foot()`) from disjoint spheres.
class EmptyOrbit : public Error {
 public:
  EmptyOrbit(bool tangent, RationalPoint foot);

  bool tangent() const noexcept { return tangent_; }
  const RationalPoint& foot() const noexcept { return foot_; }

 private:
  bool tangent_;
  RationalPoint foot_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Rational squared_distance(const RationalPoint& p, const RationalPoint& q);

bool on_sphere(const RationalPoint& p, const Sphere& s);

bool on_hyperplane(const RationalPoint& p, const Hyperplane& h);

/// Both the carrier equation and the sphere equation hold.
bool on_carried_sphere(const RationalPoint& p, const CarriedSphere& s);

/// Dimension of the affine hull; 0 for a single point.
int affine_rank(std::span<const RationalPoint> pts);

/// The unique hyperplane through d points of R^d spanning a (d-1)-flat.
/// Throws DegenerateInput when the points span less.
Hyperplane hyperplane_through(std::span<const RationalPoint> pts);

/// The unique sphere through d+1 affinely independent points of R^d.
/// Solves the d x d system 2(p_i - p_0) . c = |p_i|^2 - |p_0|^2.
Sphere circumsphere(std::span<const RationalPoint> pts);

/// Paraboloid lift (x_1..x_d) -> (x_1..x_d, |x|^2).
RationalPoint lift_point(const RationalPoint& p);

/// Image hyperplane of a sphere under the lift:
/// 2 c . x - x_{d+1} = c . c - r^2.
Hyperplane lift_sphere(const Sphere& s);

/// Intersection of the spheres |x-a|^2 = ra2 and |x-b|^2 = rb2.
/// Throws IdenticalCenters when a == b and EmptyOrbit when the spheres do
/// not cross.
CarriedSphere sphere_sphere_orbit(const RationalPoint& a, const RationalPoint& b,
                                  const Rational& ra2, const Rational& rb2);

void require_same_dim(const RationalPoint& p, std::size_t dim, const char* what);

}  // namespace nondeg
