#include "horokit/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace horokit {

namespace {

double g_tolerance = [] {
  if (const char* env = std::getenv("HOROKIT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}();

}  // namespace

double tolerance() { return g_tolerance; }
void set_tolerance(double tol) { g_tolerance = tol; }

Geodesic::Geodesic(BoundaryPoint a, BoundaryPoint b) : e1(a), e2(b) {
  if (a == b) throw error(errc::degenerate_axis, "geodesic endpoints coincide");
}

double dist(const Point& p, const Point& q) {
  double dx = p.x - q.x;
  double dy = p.y - q.y;
  // cosh d = 1 + |p-q|^2/(2 y_p y_q), rewritten for stability near d = 0.
  return 2.0 * std::asinh(0.5 * std::hypot(dx, dy) / std::sqrt(p.y * q.y));
}

double busemann(const BoundaryPoint& xi, const Point& p, const Point& q) {
  if (xi.is_infinity()) return std::log(q.y / p.y);
  double x0 = xi.value();
  double np = (p.x - x0) * (p.x - x0) + p.y * p.y;
  double nq = (q.x - x0) * (q.x - x0) + q.y * q.y;
  // Conjugate by z -> -1/(z - xi), which sends xi to infinity and a point z
  // to height Im(z)/|z - xi|^2.
  return std::log(q.y) - std::log(p.y) + std::log(np) - std::log(nq);
}

bool horoball_contains(const Horoball& h, const Point& p) {
  return busemann(h.base, h.anchor, p) >= 0.0;
}

Point disk_to_halfplane(std::complex<double> z) {
  double n = std::norm(std::complex<double>(1.0, 0.0) - z);
  double im = (1.0 - std::norm(z)) / n;
  if (!(im > 0.0))
    throw error(errc::schema_violation, "disk_to_halfplane: point not in the open disk");
  return Point{-2.0 * z.imag() / n, im};
}

BoundaryPoint disk_boundary_to_halfplane(std::complex<double> z) {
  // z = e^{i theta} maps to -cot(theta/2); z = 1 maps to infinity.
  double n = std::norm(std::complex<double>(1.0, 0.0) - z);
  if (n < tolerance() * tolerance()) return BoundaryPoint::infinity();
  return BoundaryPoint::real(-2.0 * z.imag() / n);
}

std::complex<double> halfplane_to_disk(const Point& p) {
  std::complex<double> w(p.x, p.y);
  std::complex<double> i(0.0, 1.0);
  return (w - i) / (w + i);
}

std::complex<double> halfplane_to_disk(const BoundaryPoint& b) {
  if (b.is_infinity()) return {1.0, 0.0};
  std::complex<double> w(b.value(), 0.0);
  std::complex<double> i(0.0, 1.0);
  return (w - i) / (w + i);
}

double dist_to_geodesic(const Point& p, const Geodesic& g) {
  double s;
  if (g.is_vertical()) {
    s = std::abs(p.x - g.foot()) / p.y;
  } else {
    double c = g.center(), r = g.radius();
    double dx = p.x - c;
    s = std::abs(dx * dx + p.y * p.y - r * r) / (2.0 * r * p.y);
  }
  return std::asinh(s);
}

namespace {

// Signed coordinate of z along g: position ln|M z| under a Mobius map M
// sending g to the imaginary axis. Shared by foot/segment computations.
struct AxisChart {
  // M(z) = (z - u)/(z - v) for finite endpoints (degenerate forms when one
  // endpoint is infinite) sends g to the imaginary axis. Moduli and signed
  // log-coordinates are conjugation-invariant, so a negative determinant
  // (image in the lower half-plane) is absorbed by the abs() in unmap.
  bool e1_inf, e2_inf;
  double u, v;

  explicit AxisChart(const Geodesic& g)
      : e1_inf(g.e1.is_infinity()),
        e2_inf(g.e2.is_infinity()),
        u(e1_inf ? 0.0 : g.e1.value()),
        v(e2_inf ? 0.0 : g.e2.value()) {}

  std::complex<double> map(const Point& p) const {
    std::complex<double> z(p.x, p.y);
    if (e1_inf) return -1.0 / (z - v);
    if (e2_inf) return z - u;
    return (z - u) / (z - v);
  }

  Point unmap(std::complex<double> w) const {
    std::complex<double> z;
    if (e1_inf) {
      z = v - 1.0 / w;
    } else if (e2_inf) {
      z = w + u;
    } else {
      // w = (z-u)/(z-v)  =>  z = (u - v w)/(1 - w)
      z = (u - v * w) / (1.0 - w);
    }
    return Point{z.real(), std::abs(z.imag())};
  }
};

}  // namespace

Point foot_on_geodesic(const Point& p, const Geodesic& g) {
  AxisChart chart(g);
  std::complex<double> w = chart.map(p);
  return chart.unmap(std::complex<double>(0.0, std::abs(w)));
}

double dist_to_segment(const Point& p, const Point& a, const Point& b) {
  // Geodesic through two interior points.
  Geodesic g = [&] {
    if (std::abs(a.x - b.x) < 1e-14 * (1.0 + std::abs(a.x))) {
      return Geodesic(BoundaryPoint::real(a.x), BoundaryPoint::infinity());
    }
    double c = (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (2.0 * (b.x - a.x));
    double r = std::hypot(a.x - c, a.y);
    return Geodesic(BoundaryPoint::real(c - r), BoundaryPoint::real(c + r));
  }();
  AxisChart chart(g);
  double sp = std::log(std::abs(chart.map(p)));
  double sa = std::log(std::abs(chart.map(a)));
  double sb = std::log(std::abs(chart.map(b)));
  if (sa > sb) std::swap(sa, sb);
  if (sp >= sa && sp <= sb) return dist_to_geodesic(p, g);
  return std::min(dist(p, a), dist(p, b));
}

Point reflect(const Point& p, const Geodesic& g) {
  if (g.is_vertical()) return Point{2.0 * g.foot() - p.x, p.y};
  double c = g.center(), r = g.radius();
  double dx = p.x - c;
  double n = dx * dx + p.y * p.y;
  double s = r * r / n;
  return Point{c + s * dx, s * p.y};
}

double angle_between(const Geodesic& g1, const Geodesic& g2) {
  if (g1.e1 == g2.e1 || g1.e1 == g2.e2 || g1.e2 == g2.e1 || g1.e2 == g2.e2)
    throw error(errc::no_intersection, "geodesics share an ideal endpoint");
  if (g1.is_vertical() && g2.is_vertical())
    throw error(errc::no_intersection, "parallel vertical geodesics");

  auto clamp_acos = [](double c) {
    return std::acos(std::clamp(std::abs(c), 0.0, 1.0));
  };

  if (g1.is_vertical() || g2.is_vertical()) {
    const Geodesic& vert = g1.is_vertical() ? g1 : g2;
    const Geodesic& circ = g1.is_vertical() ? g2 : g1;
    double a = vert.foot(), c = circ.center(), r = circ.radius();
    if (std::abs(a - c) >= r)
      throw error(errc::no_intersection, "vertical line misses the semicircle");
    return clamp_acos((a - c) / r);
  }

  double c1 = g1.center(), r1 = g1.radius();
  double c2 = g2.center(), r2 = g2.radius();
  double d = std::abs(c1 - c2);
  if (d >= r1 + r2 || d <= std::abs(r1 - r2))
    throw error(errc::no_intersection, "semicircles disjoint or nested");
  return clamp_acos((r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2));
}

namespace {

double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

// Direction at i of the geodesic ray from i toward the normalized ideal
// point xi: xi = cot(phi/2) with direction pi/2 - phi.
double direction_at_i_toward_boundary(bool inf, double xi) {
  if (inf) return M_PI / 2.0;
  double phi = 2.0 * std::atan2(1.0, xi);
  return wrap_angle(M_PI / 2.0 - phi);
}

double direction_at_i_toward_point(double u, double v) {
  if (std::abs(u) < 1e-15) {
    return v > 1.0 ? M_PI / 2.0 : -M_PI / 2.0;
  }
  // Circle through i and (u, v) with center c on the real axis.
  double c = (u * u + v * v - 1.0) / (2.0 * u);
  return u > 0.0 ? std::atan2(c, 1.0) : std::atan2(-c, -1.0);
}

}  // namespace

double direction_toward(const Point& p, const Point& target) {
  return direction_at_i_toward_point((target.x - p.x) / p.y, target.y / p.y);
}

double direction_toward(const Point& p, const BoundaryPoint& target) {
  if (target.is_infinity()) return direction_at_i_toward_boundary(true, 0.0);
  return direction_at_i_toward_boundary(false, (target.value() - p.x) / p.y);
}

Point geodesic_step(const Point& p, double theta, double t) {
  // Rotate the upward frame at i to direction theta, flow, then translate
  // back to p. r_phi = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]]
  // has direction pi/2 - phi at i.
  double phi = M_PI / 2.0 - theta;
  double ch = std::cos(phi / 2.0), sh = std::sin(phi / 2.0);
  std::complex<double> z(0.0, std::exp(t));
  std::complex<double> w = (ch * z - sh) / (sh * z + ch);
  return Point{p.x + p.y * w.real(), p.y * w.imag()};
}

BoundaryPoint ray_endpoint(const Point& p, double theta) {
  double phi = wrap_angle(M_PI / 2.0 - theta);
  if (std::abs(phi) < 1e-15) return BoundaryPoint::infinity();
  double xi = std::cos(phi / 2.0) / std::sin(phi / 2.0);
  return BoundaryPoint::real(p.x + p.y * xi);
}

}  // namespace horokit
