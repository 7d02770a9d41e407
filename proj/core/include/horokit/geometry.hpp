#pragma once

#include <cmath>
#include <complex>
#include <variant>

#include "horokit/errors.hpp"

namespace horokit {

// Point of the upper half-plane model, y > 0.
struct Point {
  double x = 0.0;
  double y = 1.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Point of the circle at infinity: a real number or the point at infinity.
class BoundaryPoint {
 public:
  BoundaryPoint() : inf_(true), x_(0.0) {}

  static BoundaryPoint real(double x) { return BoundaryPoint(false, x); }
  static BoundaryPoint infinity() { return BoundaryPoint(true, 0.0); }

  bool is_infinity() const { return inf_; }
  // Valid only when !is_infinity().
  double value() const { return x_; }

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.x_ == b.x_;
  }

 private:
  BoundaryPoint(bool inf, double x) : inf_(inf), x_(x) {}
  bool inf_;
  double x_;
};

// Unoriented geodesic, stored by its two distinct ideal endpoints.
// Either a vertical line (one endpoint at infinity) or a semicircle
// orthogonal to the real axis.
struct Geodesic {
  BoundaryPoint e1;
  BoundaryPoint e2;

  Geodesic(BoundaryPoint a, BoundaryPoint b);

  bool is_vertical() const { return e1.is_infinity() || e2.is_infinity(); }
  // Abscissa of the vertical line; only when is_vertical().
  double foot() const { return e1.is_infinity() ? e2.value() : e1.value(); }
  // Euclidean center/radius of the semicircle; only when !is_vertical().
  double center() const { return 0.5 * (e1.value() + e2.value()); }
  double radius() const { return 0.5 * std::abs(e1.value() - e2.value()); }
};

// Horoball based at `base`, bounded by the horocycle through `anchor`.
// Interior/membership convention: busemann(base, anchor, z) >= 0.
struct Horoball {
  BoundaryPoint base;
  Point anchor;
};

// Hyperbolic distance: d = 2 asinh(|p-q| / (2 sqrt(y_p y_q))).
double dist(const Point& p, const Point& q);

// Busemann cocycle beta_xi(p, q) = lim_{z->xi} [d(p,z) - d(q,z)].
// Positive when q is deeper toward xi than p.
// xi = infinity: ln(y_q/y_p). Finite xi: ln((y_q |p-xi|^2)/(y_p |q-xi|^2)).
double busemann(const BoundaryPoint& xi, const Point& p, const Point& q);

bool horoball_contains(const Horoball& h, const Point& p);

// Cayley map z -> i(1+z)/(1-z) from the unit disk to the half-plane.
Point disk_to_halfplane(std::complex<double> z);
BoundaryPoint disk_boundary_to_halfplane(std::complex<double> z);
// Inverse map w -> (w-i)/(w+i).
std::complex<double> halfplane_to_disk(const Point& p);
std::complex<double> halfplane_to_disk(const BoundaryPoint& b);

// Distance from p to the full geodesic g.
// Vertical line at a: sinh d = |x-a|/y.
// Semicircle (c, r):  sinh d = ||p-c|^2 - r^2| / (2 r y).
double dist_to_geodesic(const Point& p, const Geodesic& g);

// Distance from p to the geodesic segment [a, b].
double dist_to_segment(const Point& p, const Point& a, const Point& b);

// Nearest point of the full geodesic g to p.
Point foot_on_geodesic(const Point& p, const Geodesic& g);

// Reflection (orientation-reversing isometry) fixing g pointwise.
Point reflect(const Point& p, const Geodesic& g);

// Acute-or-right intersection angle of two geodesics meeting in the open
// half-plane. Throws errc::no_intersection when disjoint, tangent at the
// boundary, or sharing an endpoint.
double angle_between(const Geodesic& g1, const Geodesic& g2);

// Initial direction (Euclidean angle in (-pi, pi]) at p of the geodesic
// from p toward a target point or ideal point.
double direction_toward(const Point& p, const Point& target);
double direction_toward(const Point& p, const BoundaryPoint& target);

// Point at hyperbolic distance t from p in initial direction theta.
Point geodesic_step(const Point& p, double theta, double t);

// Ideal endpoint of the geodesic ray from p in initial direction theta.
BoundaryPoint ray_endpoint(const Point& p, double theta);

}  // namespace horokit
