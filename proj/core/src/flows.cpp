#include "horokit/flows.hpp"

#include <cmath>

namespace horokit {

Point basepoint(const Frame& f) {
  const Mobius& m = f.m;
  double den = m.c * m.c + m.d * m.d;
  return Point{(m.a * m.c + m.b * m.d) / den, 1.0 / den};
}

std::pair<BoundaryPoint, BoundaryPoint> endpoints(const Frame& f) {
  return {apply(f.m, BoundaryPoint::real(0.0)), apply(f.m, BoundaryPoint::infinity())};
}

double direction(const Frame& f) {
  // Pushforward of the upward vector at i: arg(i / (c i + d)^2).
  double t = M_PI / 2.0 - 2.0 * std::atan2(f.m.c, f.m.d);
  while (t > M_PI) t -= 2.0 * M_PI;
  while (t <= -M_PI) t += 2.0 * M_PI;
  return t;
}

Frame geodesic_flow(const Frame& f, double t) {
  return Frame(f.m * Mobius::diagonal(t));
}

Frame horocycle_flow(const Frame& f, double s) {
  return Frame(f.m * Mobius::unipotent(s));
}

Frame frame_from_endpoints(const BoundaryPoint& minus, const BoundaryPoint& plus,
                           const Point& base) {
  if (minus == plus) throw error(errc::degenerate_axis, "frame endpoints coincide");
  Geodesic g(minus, plus);
  if (dist_to_geodesic(base, g) > tolerance())
    throw error(errc::off_geodesic, "basepoint is not on the geodesic (minus, plus)");

  Mobius m0 = [&] {
    if (minus.is_infinity()) return Mobius(-plus.value(), 1.0, -1.0, 0.0);
    if (plus.is_infinity()) return Mobius(1.0, minus.value(), 0.0, 1.0);
    double u = minus.value(), w = plus.value();
    if (w > u) return Mobius(w, u, 1.0, 1.0);
    return Mobius(w, -u, 1.0, -1.0);
  }();
  // Slide along the geodesic so the basepoint lands on `base`.
  Point nb = apply(m0.inverse(), base);
  return Frame(m0 * Mobius::diagonal(std::log(nb.y)));
}

namespace {

double rotation_gap(const Mobius& m) {
  double t = 2.0 * std::atan2(m.c, m.d);
  while (t > M_PI) t -= 2.0 * M_PI;
  while (t <= -M_PI) t += 2.0 * M_PI;
  return std::abs(t);
}

}  // namespace

double frame_dist(const Frame& f, const Frame& g) {
  double base = dist(basepoint(f), basepoint(g));
  Mobius h = f.m.inverse() * g.m;
  double ang = 0.5 * (rotation_gap(h) + rotation_gap(h.inverse()));
  return base + ang;
}

}  // namespace horokit
