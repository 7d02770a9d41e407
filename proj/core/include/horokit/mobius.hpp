#pragma once

#include <vector>

#include "horokit/geometry.hpp"

namespace horokit {

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic };

// Element of PSL(2,R): real matrix [[a,b],[c,d]], det = 1 after
// normalization, sign canonicalized so the first nonzero entry of
// (a,b,c,d) is positive.
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Mobius() = default;
  // Normalizes: requires ad - bc > 0.
  Mobius(double a, double b, double c, double d);

  static Mobius identity() { return Mobius(); }
  // Diagonal a_t = [[e^{t/2}, 0], [0, e^{-t/2}]] (geodesic flow).
  static Mobius diagonal(double t);
  // Unipotent n_s = [[1, 0], [s, 1]] (unstable horocycle flow).
  static Mobius unipotent(double s);
  // Rotation about i by angle phi (stabilizer of i).
  static Mobius rotation(double phi);

  Mobius inverse() const { return Mobius(d, -b, -c, a); }
  double trace_abs() const { return a + d < 0 ? -(a + d) : a + d; }

  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return Mobius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                  m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
  }
};

// Largest absolute entry-wise difference, mod the PSL sign.
double mobius_gap(const Mobius& m, const Mobius& n);

Point apply(const Mobius& m, const Point& z);
BoundaryPoint apply(const Mobius& m, const BoundaryPoint& z);
Geodesic apply(const Mobius& m, const Geodesic& g);

IsometryKind classify(const Mobius& m);

// Boundary fixed points: 2 for hyperbolic (attracting last), 1 for
// parabolic, 0 for elliptic. Throws errc::is_identity for the identity.
std::vector<BoundaryPoint> fixed_points(const Mobius& m);

BoundaryPoint attracting_fixed_point(const Mobius& m);
BoundaryPoint repelling_fixed_point(const Mobius& m);

// 2 arccosh(|tr|/2). Throws errc::not_hyperbolic otherwise.
double translation_length(const Mobius& m);

// Hyperbolic element with repelling point p, attracting point q,
// translation length l > 0.
Mobius from_axis_length(const BoundaryPoint& p, const BoundaryPoint& q, double l);

// Same, parametrized by the multiplier lambda = e^l > 1.
Mobius from_axis_multiplier(const BoundaryPoint& p, const BoundaryPoint& q, double lambda);

// Translation along the axis (p, q), p repelling, by the distance between
// the two crossing points axis∩A and axis∩B. Maps A onto B exactly when the
// configuration is balanced (the two ideal endpoints of A and of B have
// matching ratios in axis-normalized coordinates). Throws errc::axis_miss
// when the axis fails to cross A or B, errc::degenerate_length when the
// crossing points coincide.
Mobius pairing_isometry(const BoundaryPoint& p, const BoundaryPoint& q,
                        const Geodesic& A, const Geodesic& B);

// Crossing point of two geodesics in the open half-plane.
// Throws errc::no_intersection if they do not cross.
Point geodesic_intersection(const Geodesic& g1, const Geodesic& g2);

}  // namespace horokit
