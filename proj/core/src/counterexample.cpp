#include "horokit/counterexample.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace horokit {

Schedule Schedule::geometric(double alpha) {
  if (!(alpha > 1.0)) throw error(errc::schema_violation, "geometric schedule needs alpha > 1");
  Schedule s;
  s.kind = Kind::Geometric;
  s.alpha = alpha;
  return s;
}

Schedule Schedule::with_radii(std::vector<double> radii) {
  for (double r : radii)
    if (!(r > 0.0)) throw error(errc::schema_violation, "custom schedule radii must be positive");
  Schedule s;
  s.kind = Kind::Custom;
  s.custom = std::move(radii);
  return s;
}

double Schedule::radius(int k) const {
  if (k < 1) throw error(errc::index_out_of_range, "schedule index starts at 1");
  switch (kind) {
    case Kind::Linear:
      return static_cast<double>(k);
    case Kind::Geometric:
      return std::pow(alpha, k);
    case Kind::Custom:
      if (static_cast<std::size_t>(k) > custom.size())
        throw error(errc::index_out_of_range, "custom schedule exhausted");
      return custom[static_cast<std::size_t>(k) - 1];
  }
  return 0.0;
}

double x_sequence(const Schedule& schedule, int n) {
  if (n < 1) throw error(errc::index_out_of_range, "x_sequence needs n >= 1");
  switch (schedule.kind) {
    case Schedule::Kind::Linear: {
      // x_n + n = 2 (1 + ... + n) = n(n+1), exactly.
      long long nn = n;
      return static_cast<double>(nn * (nn + 1) - nn);
    }
    case Schedule::Kind::Geometric: {
      // x_n + a^n = 2a(a^n - 1)/(a - 1).
      double a = schedule.alpha;
      return std::pow(a, n) * (a + 1.0) / (a - 1.0) - 2.0 * a / (a - 1.0);
    }
    case Schedule::Kind::Custom: {
      double sum = 0.0;
      for (int k = 1; k <= n; ++k) sum += schedule.radius(k);
      return 2.0 * sum - schedule.radius(n);
    }
  }
  return 0.0;
}

PairedCircle plus_circle(const CounterexampleConfig& config, int n) {
  if (config.variant == Variant::Tangent) return PairedCircle{2.0 * n + 1.0, 1.0};
  return PairedCircle{x_sequence(config.schedule, n), 1.0};
}

PairedCircle minus_circle(const CounterexampleConfig& config, int n) {
  return PairedCircle{-x_sequence(config.schedule, n), config.schedule.radius(n)};
}

Geodesic axis_of(const CounterexampleConfig& config, int n) {
  double u = config.variant == Variant::Tangent ? 2.0 * n + 1.0 : x_sequence(config.schedule, n);
  return Geodesic(BoundaryPoint::real(u), BoundaryPoint::real(-x_sequence(config.schedule, n)));
}

namespace {

void check_index(const CounterexampleConfig& config, int n) {
  if (n < 1 || n > config.n_max)
    throw error(errc::index_out_of_range, "row index outside 1..n_max");
}

// Minimal multiplier of the translation along (u, w) mapping the closed
// exterior of the plus disk into the closed minus disk. In coordinates
// normalized by z -> (z - u)/(z - w) the plus circle becomes an arch
// straddling 0 and the minus disk the outside of another arch; containment
// reads off as a maximum of two endpoint ratios.
double minimal_pairing_multiplier(double u, double w, const PairedCircle& plus,
                                  const PairedCircle& minus) {
  auto nrm = [&](double z) { return (z - u) / (z - w); };
  double ap_l = nrm(plus.left()), ap_r = nrm(plus.right());
  double bm_l = nrm(minus.right()), bm_r = nrm(minus.left());
  if (!(ap_l < 0.0 && ap_r > 0.0 && bm_l < 0.0 && bm_r > 0.0))
    throw error(errc::axis_miss, "axis does not cross both paired circles");
  return std::max(bm_l / ap_l, bm_r / ap_r);
}

}  // namespace

SchottkySpec build(const CounterexampleConfig& config) {
  if (config.n_max < 1) throw error(errc::schema_violation, "n_max must be at least 1");
  SchottkySpec spec;
  for (int n = 1; n <= config.n_max; ++n) {
    PairedCircle plus = plus_circle(config, n);
    PairedCircle minus = minus_circle(config, n);
    double u = plus.center;  // repelling; both variants center the plus circle on it
    double w = -x_sequence(config.schedule, n);
    try {
      double lambda = minimal_pairing_multiplier(u, w, plus, minus);
      Mobius gamma =
          from_axis_multiplier(BoundaryPoint::real(u), BoundaryPoint::real(w), lambda);
      spec.pairs.push_back({plus, minus, gamma});
    } catch (const error& e) {
      throw error(errc::ping_pong_failed,
                  "ping-pong failed at pair " + std::to_string(n) +
                      ": schedule too aggressive for the variant (" + e.what() + ")");
    }
  }
  PingPongResult cert = verify_ping_pong(spec);
  if (!cert.certified) {
    int offending = cert.violations.front().pair_a;
    throw error(errc::ping_pong_failed,
                "ping-pong failed at pair " + std::to_string(offending) + ": " +
                    cert.violations.front().message);
  }
  return spec;
}

SpecialPoints special_points(const CounterexampleConfig& config, int n) {
  check_index(config, n);
  Geodesic axis = axis_of(config, n);
  SpecialPoints sp;
  sp.P = geodesic_intersection(axis, plus_circle(config, n).geodesic());
  sp.N = geodesic_intersection(axis, minus_circle(config, n).geodesic());
  sp.z = Point{2.0 * n + 1.0, 1.0};
  return sp;
}

double crossing_angle(const CounterexampleConfig& config, int n) {
  check_index(config, n);
  Geodesic imaginary_axis(BoundaryPoint::real(0.0), BoundaryPoint::infinity());
  return angle_between(imaginary_axis, axis_of(config, n));
}

std::vector<RowReport> report(const CounterexampleConfig& config) {
  SchottkySpec spec = build(config);
  const Point o{0.0, 1.0};
  std::vector<RowReport> rows;
  rows.reserve(static_cast<std::size_t>(config.n_max));
  for (int n = 1; n <= config.n_max; ++n) {
    RowReport row;
    row.n = n;
    row.x_n = x_sequence(config.schedule, n);
    row.r_n = config.schedule.radius(n);
    SpecialPoints sp = special_points(config, n);
    row.P_n = sp.P;
    row.N_n = sp.N;
    const Mobius& gamma = spec.pairs[static_cast<std::size_t>(n) - 1].gamma;
    row.ell_n = translation_length(gamma);
    row.im_gamma_o = apply(gamma, o).y;
    row.d_o_zn = dist(o, sp.z);
    row.d_Pn_zn = dist(sp.P, sp.z);
    row.theta_n = crossing_angle(config, n);
    rows.push_back(row);
  }
  return rows;
}

OneSidedness one_sidedness_certificate(const CounterexampleConfig& config, double D, double R,
                                       int max_len) {
  SchottkySpec spec = build(config);
  Frame v = frame_from_endpoints(BoundaryPoint::infinity(), BoundaryPoint::real(0.0),
                                 Point{0.0, 1.0});
  std::vector<OrbitPoint> orbit = enumerate_orbit(spec, max_len);

  OneSidedness result;
  result.census = census_over_points(orbit, v, D, R, max_len);
  Horoball hor = horoball_of(v);
  double depth = -std::numeric_limits<double>::infinity();
  for (const OrbitPoint& op : orbit)
    depth = std::max(depth, busemann(hor.base, hor.anchor, op.point));
  result.attained_depth = depth;

  if (result.census.minus_count > 0) result.status = CertStatus::MinusSideOccupied;
  else if (result.census.plus_count >= 1) result.status = CertStatus::Certified;
  else result.status = CertStatus::WithheldNoDepth;
  return result;
}

}  // namespace horokit
