#include "horokit/criteria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace horokit {

Horoball horoball_of(const Frame& v) {
  return Horoball{endpoints(v).first, basepoint(v)};
}

NormalizedCoords normalized_coords(const Frame& f, const Point& p) {
  Point q = apply(f.m.inverse(), p);
  return NormalizedCoords{q.x, q.y};
}

bool in_horoball_half(const Frame& v, double D, const Point& p, Side side) {
  NormalizedCoords q = normalized_coords(Frame(v.m * Mobius::diagonal(-D)), p);
  // Closed conditions, evaluated with the ambient tolerance so that exact
  // boundary points survive the normalization rounding. In this chart the
  // horoball at v- through the basepoint is { Im >= |.|^2 }.
  double tol = tolerance();
  if (q.w < q.u * q.u + q.w * q.w - tol) return false;
  return side == Side::Plus ? q.u >= -tol : q.u <= tol;
}

bool in_cone(const Frame& v, double alpha, const Point& p) {
  if (!horoball_contains(horoball_of(v), p)) return false;
  auto [minus, plus] = endpoints(v);
  return dist_to_geodesic(p, Geodesic(minus, plus)) <= alpha;
}

Census census_over_points(const std::vector<OrbitPoint>& points, const Frame& v, double D,
                          double R, int max_len) {
  Census c;
  c.depth = D;
  c.width = R;
  c.max_len = max_len;
  for (const OrbitPoint& op : points) {
    if (in_cone(v, R, op.point)) continue;
    if (in_horoball_half(v, D, op.point, Side::Plus)) ++c.plus_count;
    if (in_horoball_half(v, D, op.point, Side::Minus)) ++c.minus_count;
  }
  return c;
}

long long full_horoball_count(const std::vector<OrbitPoint>& points, const Frame& v, double D,
                              double R) {
  long long count = 0;
  for (const OrbitPoint& op : points) {
    if (in_cone(v, R, op.point)) continue;
    if (in_horoball_half(v, D, op.point, Side::Plus) ||
        in_horoball_half(v, D, op.point, Side::Minus))
      ++count;
  }
  return count;
}

Census census(const SchottkySpec& spec, const Frame& v, double D, double R, int max_len) {
  return census_over_points(enumerate_orbit(spec, max_len), v, D, R, max_len);
}

std::vector<double> radial_witnesses(const SchottkySpec& spec, const Frame& v, double R0,
                                     double t_max, int max_len) {
  std::vector<OrbitPoint> orbit = enumerate_orbit(spec, max_len);
  std::vector<double> witnesses;
  const double step = 0.1;
  int n = static_cast<int>(std::floor(t_max / step + 1e-12));
  for (int i = 0; i <= n; ++i) {
    double t = i * step;
    Point base = basepoint(geodesic_flow(v, -t));
    for (const OrbitPoint& op : orbit) {
      if (dist(base, op.point) <= R0) {
        witnesses.push_back(t);
        break;
      }
    }
  }
  return witnesses;
}

double density_gap(const SchottkySpec& spec, const Frame& v, const std::vector<Frame>& targets,
                   std::pair<double, double> s_range, int s_steps, int max_len) {
  if (targets.empty()) throw error(errc::empty_targets, "density_gap: no target frames");
  if (s_steps < 1) throw std::invalid_argument("density_gap: s_steps must be at least 1");

  std::vector<Mobius> words;
  {
    std::vector<OrbitPoint> orbit = enumerate_orbit(spec, max_len);  // certifies the spec
    words.reserve(orbit.size());
    for (const OrbitPoint& op : orbit) words.push_back(evaluate(spec, op.word));
  }

  std::vector<Frame> flowed;
  flowed.reserve(static_cast<std::size_t>(s_steps) + 1);
  for (int i = 0; i <= s_steps; ++i) {
    double s = s_range.first + (s_range.second - s_range.first) * i / s_steps;
    flowed.push_back(horocycle_flow(v, s));
  }

  double gap = 0.0;
  for (const Frame& w : targets) {
    double best = std::numeric_limits<double>::infinity();
    for (const Mobius& g : words) {
      Frame gw(g * w.m);
      for (const Frame& hv : flowed) best = std::min(best, frame_dist(hv, gw));
    }
    gap = std::max(gap, best);
  }
  return gap;
}

}  // namespace horokit
