#include "horokit/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horokit {

Mobius::Mobius(double a_, double b_, double c_, double d_) {
  double det = a_ * d_ - b_ * c_;
  if (!(det > 0.0)) throw std::invalid_argument("Mobius: determinant must be positive");
  double s = std::sqrt(det);
  a = a_ / s;
  b = b_ / s;
  c = c_ / s;
  d = d_ / s;
  // Canonical sign: first nonzero of (a, b, c, d) positive.
  double lead = a != 0.0 ? a : b != 0.0 ? b : c != 0.0 ? c : d;
  if (lead < 0.0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
}

Mobius Mobius::diagonal(double t) {
  Mobius m;
  m.a = std::exp(t / 2.0);
  m.d = std::exp(-t / 2.0);
  return m;
}

Mobius Mobius::unipotent(double s) {
  Mobius m;
  m.c = s;
  return m;
}

Mobius Mobius::rotation(double phi) {
  return Mobius(std::cos(phi / 2.0), -std::sin(phi / 2.0), std::sin(phi / 2.0),
                std::cos(phi / 2.0));
}

double mobius_gap(const Mobius& m, const Mobius& n) {
  double plus = std::max({std::abs(m.a - n.a), std::abs(m.b - n.b),
                          std::abs(m.c - n.c), std::abs(m.d - n.d)});
  double minus = std::max({std::abs(m.a + n.a), std::abs(m.b + n.b),
                           std::abs(m.c + n.c), std::abs(m.d + n.d)});
  return std::min(plus, minus);
}

Point apply(const Mobius& m, const Point& z) {
  double u = m.c * z.x + m.d;
  double den = u * u + m.c * m.c * z.y * z.y;
  return Point{((m.a * z.x + m.b) * u + m.a * m.c * z.y * z.y) / den, z.y / den};
}

BoundaryPoint apply(const Mobius& m, const BoundaryPoint& z) {
  if (z.is_infinity()) {
    if (m.c == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::real(m.a / m.c);
  }
  double den = m.c * z.value() + m.d;
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint::real((m.a * z.value() + m.b) / den);
}

Geodesic apply(const Mobius& m, const Geodesic& g) {
  return Geodesic(apply(m, g.e1), apply(m, g.e2));
}

IsometryKind classify(const Mobius& m) {
  double t = m.trace_abs();
  double tol = tolerance();
  if (std::abs(t - 2.0) <= tol) {
    bool is_id = std::abs(m.b) <= tol && std::abs(m.c) <= tol && std::abs(m.a - m.d) <= tol;
    return is_id ? IsometryKind::Identity : IsometryKind::Parabolic;
  }
  return t < 2.0 ? IsometryKind::Elliptic : IsometryKind::Hyperbolic;
}

std::vector<BoundaryPoint> fixed_points(const Mobius& m) {
  IsometryKind kind = classify(m);
  if (kind == IsometryKind::Identity)
    throw error(errc::is_identity, "fixed_points: identity fixes everything");
  if (kind == IsometryKind::Elliptic) return {};

  // Boundary fixed points solve c z^2 + (d - a) z - b = 0.
  if (m.c == 0.0) {
    if (kind == IsometryKind::Parabolic) return {BoundaryPoint::infinity()};
    BoundaryPoint other = BoundaryPoint::real(m.b / (m.d - m.a));
    bool inf_attracting = std::abs(m.a) > std::abs(m.d);
    if (inf_attracting) return {other, BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), other};
  }

  if (kind == IsometryKind::Parabolic)
    return {BoundaryPoint::real((m.a - m.d) / (2.0 * m.c))};

  double tr = m.a + m.d;
  double disc = tr * tr - 4.0;
  double s = std::sqrt(disc);
  double z1 = (m.a - m.d + s) / (2.0 * m.c);
  double z2 = (m.a - m.d - s) / (2.0 * m.c);
  // Attracting root has |m'(z)| < 1, i.e. |c z + d| > 1; the two roots have
  // (c z1 + d)(c z2 + d) = det = 1, so exactly one qualifies.
  bool z1_attracting = std::abs(m.c * z1 + m.d) > 1.0;
  if (z1_attracting) return {BoundaryPoint::real(z2), BoundaryPoint::real(z1)};
  return {BoundaryPoint::real(z1), BoundaryPoint::real(z2)};
}

BoundaryPoint attracting_fixed_point(const Mobius& m) {
  if (classify(m) != IsometryKind::Hyperbolic)
    throw error(errc::not_hyperbolic, "attracting_fixed_point: not hyperbolic");
  return fixed_points(m).back();
}

BoundaryPoint repelling_fixed_point(const Mobius& m) {
  if (classify(m) != IsometryKind::Hyperbolic)
    throw error(errc::not_hyperbolic, "repelling_fixed_point: not hyperbolic");
  return fixed_points(m).front();
}

double translation_length(const Mobius& m) {
  if (classify(m) != IsometryKind::Hyperbolic)
    throw error(errc::not_hyperbolic, "translation_length: not hyperbolic");
  return 2.0 * std::acosh(m.trace_abs() / 2.0);
}

Mobius from_axis_multiplier(const BoundaryPoint& p, const BoundaryPoint& q, double lambda) {
  if (p == q) throw error(errc::degenerate_axis, "axis endpoints coincide");
  if (!(lambda > 1.0))
    throw error(errc::degenerate_length, "multiplier must exceed 1");

  if (p.is_infinity()) {
    // Repelling at infinity: z -> z/lambda + w(1 - 1/lambda).
    double w = q.value();
    return Mobius(1.0, w * (lambda - 1.0), 0.0, lambda);
  }
  if (q.is_infinity()) {
    // Attracting at infinity: z -> lambda z + u(1 - lambda).
    double u = p.value();
    return Mobius(lambda, u * (1.0 - lambda), 0.0, 1.0);
  }
  double u = p.value(), w = q.value();
  // Conjugate of z -> lambda z by a map sending 0 -> u, infinity -> w.
  return Mobius(lambda * w - u, (1.0 - lambda) * u * w, lambda - 1.0, w - lambda * u);
}

Mobius from_axis_length(const BoundaryPoint& p, const BoundaryPoint& q, double l) {
  if (!(l > 0.0)) throw error(errc::degenerate_length, "translation length must be positive");
  return from_axis_multiplier(p, q, std::exp(l));
}

Point geodesic_intersection(const Geodesic& g1, const Geodesic& g2) {
  if (g1.is_vertical() && g2.is_vertical())
    throw error(errc::no_intersection, "parallel vertical geodesics");

  if (g1.is_vertical() || g2.is_vertical()) {
    const Geodesic& vert = g1.is_vertical() ? g1 : g2;
    const Geodesic& circ = g1.is_vertical() ? g2 : g1;
    double a = vert.foot(), c = circ.center(), r = circ.radius();
    double t = a - c;
    double y2 = (r - t) * (r + t);
    if (!(y2 > 0.0)) throw error(errc::no_intersection, "vertical line misses the semicircle");
    return Point{a, std::sqrt(y2)};
  }

  // Work from the smaller circle: when its radius is tiny against the other
  // circle's scale, the offset form (r_s^2 - r_b^2 + dc^2)/(2 dc) cancels the
  // large squares against each other and y^2 = (r_s - t)(r_s + t) stays
  // accurate.
  double cs = g1.center(), rs = g1.radius();
  double cb = g2.center(), rb = g2.radius();
  if (rs > rb) {
    std::swap(cs, cb);
    std::swap(rs, rb);
  }
  double dc = cb - cs;
  if (dc == 0.0) throw error(errc::no_intersection, "concentric semicircles");
  double t = (rs * rs - rb * rb + dc * dc) / (2.0 * dc);
  double y2 = (rs - t) * (rs + t);
  if (!(y2 > 0.0)) throw error(errc::no_intersection, "semicircles disjoint or nested");
  return Point{cs + t, std::sqrt(y2)};
}

Mobius pairing_isometry(const BoundaryPoint& p, const BoundaryPoint& q,
                        const Geodesic& A, const Geodesic& B) {
  Geodesic axis(p, q);
  Point pa, pb;
  try {
    pa = geodesic_intersection(axis, A);
  } catch (const error&) {
    throw error(errc::axis_miss, "axis does not cross A");
  }
  try {
    pb = geodesic_intersection(axis, B);
  } catch (const error&) {
    throw error(errc::axis_miss, "axis does not cross B");
  }
  double l = dist(pa, pb);
  if (l < tolerance())
    throw error(errc::degenerate_length, "crossing points coincide: no strict motion");
  return from_axis_length(p, q, l);
}

}  // namespace horokit
