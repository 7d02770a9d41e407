#include <doctest.h>

#include <cmath>
#include <random>

#include "horokit/geometry.hpp"

using namespace horokit;

namespace {

// Independent oracle: arclength of the metric |dz|/y along the geodesic
// circle through p and q, by Riemann sum over the arc.
double dist_by_integration(const Point& p, const Point& q, int steps = 200000) {
  double c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
  double r = std::hypot(p.x - c, p.y);
  double a1 = std::atan2(p.y, p.x - c);
  double a2 = std::atan2(q.y, q.x - c);
  double total = 0.0;
  for (int i = 0; i < steps; ++i) {
    double u = a1 + (a2 - a1) * (i + 0.5) / steps;
    total += std::abs(a2 - a1) / steps * r / (r * std::sin(u));
  }
  return total;
}

std::mt19937_64 rng_for(const char* tag) {
  std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
  return std::mt19937_64(seq);
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(-8.0, 8.0);
  std::uniform_real_distribution<double> uy(std::log(0.05), std::log(20.0));
  return Point{ux(rng), std::exp(uy(rng))};
}

}  // namespace

TEST_CASE("dist matches the vertical geodesic and the integral oracle") {
  CHECK(dist(Point{0, 1}, Point{0, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(dist(Point{3, 0.5}, Point{3, 0.5}) == 0.0);
  double d = dist(Point{0, 1}, Point{1, 1});
  CHECK(d == doctest::Approx(std::acosh(1.5)).epsilon(1e-12));
  CHECK(d == doctest::Approx(dist_by_integration(Point{0, 1}, Point{1, 1})).epsilon(1e-8));
}

TEST_CASE("dist is a metric on random triples") {
  auto rng = rng_for("metric");
  for (int i = 0; i < 10000; ++i) {
    Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(dist(a, b) == dist(b, a));
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-12);
  }
}

TEST_CASE("busemann at infinity matches the distance-difference limit") {
  double direct = busemann(BoundaryPoint::infinity(), Point{0, 1}, Point{0, 2});
  CHECK(direct == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  Point far{0.0, 1e8};
  double limit = dist(Point{0, 1}, far) - dist(Point{0, 2}, far);
  CHECK(direct == doctest::Approx(limit).epsilon(1e-7));
}

TEST_CASE("busemann basics and cocycle identity") {
  auto rng = rng_for("busemann");
  CHECK(busemann(BoundaryPoint::real(2.0), Point{1, 3}, Point{1, 3}) == 0.0);
  // conjugate of the infinity case by z -> -1/z
  CHECK(busemann(BoundaryPoint::real(0.0), Point{0, 1}, Point{0, 0.5}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  std::uniform_real_distribution<double> uxi(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    BoundaryPoint xi = (i % 4 == 0) ? BoundaryPoint::infinity() : BoundaryPoint::real(uxi(rng));
    Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
    double lhs = busemann(xi, p, q) + busemann(xi, q, r);
    CHECK(lhs == doctest::Approx(busemann(xi, p, r)).epsilon(1e-10));
  }
}

TEST_CASE("Cayley map sends the disk to the half-plane") {
  Point o = disk_to_halfplane({0.0, 0.0});
  CHECK(o.x == doctest::Approx(0.0));
  CHECK(o.y == doctest::Approx(1.0));
  CHECK(disk_boundary_to_halfplane({1.0, 0.0}).is_infinity());
  BoundaryPoint m1 = disk_boundary_to_halfplane({-1.0, 0.0});
  CHECK_FALSE(m1.is_infinity());
  CHECK(m1.value() == doctest::Approx(0.0));

  auto rng = rng_for("cayley");
  std::uniform_real_distribution<double> ur(0.0, 0.999), ua(0.0, 2.0 * M_PI);
  for (int i = 0; i < 5000; ++i) {
    double r = ur(rng), a = ua(rng);
    std::complex<double> z(r * std::cos(a), r * std::sin(a));
    std::complex<double> back = halfplane_to_disk(disk_to_halfplane(z));
    CHECK(std::abs(back - z) <= 1e-12);
  }
}

TEST_CASE("dist_to_geodesic closed forms") {
  Geodesic imag(BoundaryPoint::real(0.0), BoundaryPoint::infinity());
  double d = dist_to_geodesic(Point{1, 1}, imag);
  CHECK(d == doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
  // minimization oracle over sampled geodesic points
  double best = 1e300;
  for (int i = -4000; i <= 4000; ++i) {
    best = std::min(best, dist(Point{1, 1}, Point{0, std::exp(i * 0.001)}));
  }
  CHECK(d == doctest::Approx(best).epsilon(1e-6));

  CHECK(dist_to_geodesic(Point{0, 2}, imag) == 0.0);
  Geodesic unit(BoundaryPoint::real(-1.0), BoundaryPoint::real(1.0));
  CHECK(dist_to_geodesic(Point{0, 2}, unit) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  auto rng = rng_for("sinh");
  for (int i = 0; i < 10000; ++i) {
    Point p = random_point(rng);
    double lhs = std::sinh(dist_to_geodesic(p, imag));
    CHECK(lhs == doctest::Approx(std::abs(p.x) / p.y).epsilon(1e-10));
  }
}

TEST_CASE("foot_on_geodesic realizes the distance") {
  auto rng = rng_for("foot");
  std::uniform_real_distribution<double> ue(-6.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    double e1 = ue(rng), e2 = ue(rng);
    if (std::abs(e1 - e2) < 0.1) continue;
    Geodesic g(BoundaryPoint::real(e1), BoundaryPoint::real(e2));
    Point p = random_point(rng);
    Point f = foot_on_geodesic(p, g);
    CHECK(dist(p, f) == doctest::Approx(dist_to_geodesic(p, g)).epsilon(1e-9));
    CHECK(dist_to_geodesic(f, g) <= 1e-9);
  }
}

TEST_CASE("reflect is an involutive isometry") {
  Geodesic imag(BoundaryPoint::real(0.0), BoundaryPoint::infinity());
  Point r = reflect(Point{1, 1}, imag);
  CHECK(r.x == doctest::Approx(-1.0));
  CHECK(r.y == doctest::Approx(1.0));

  Geodesic unit(BoundaryPoint::real(-1.0), BoundaryPoint::real(1.0));
  Point fixed = reflect(Point{0, 1}, unit);
  CHECK(fixed.x == doctest::Approx(0.0));
  CHECK(fixed.y == doctest::Approx(1.0));
  Point inv = reflect(Point{0, 2}, unit);
  CHECK(inv.x == doctest::Approx(0.0));
  CHECK(inv.y == doctest::Approx(0.5));

  auto rng = rng_for("reflect");
  std::uniform_real_distribution<double> ue(-6.0, 6.0);
  for (int i = 0; i < 5000; ++i) {
    double e1 = ue(rng), e2 = ue(rng);
    // keep the inversion well conditioned: the roundtrip error grows with
    // the squared ratio of the point-to-center distance to the radius
    if (std::abs(e1 - e2) < 1.0) continue;
    Geodesic g = (i % 3 == 0) ? Geodesic(BoundaryPoint::real(e1), BoundaryPoint::infinity())
                              : Geodesic(BoundaryPoint::real(e1), BoundaryPoint::real(e2));
    Point p = random_point(rng), q = random_point(rng);
    Point rp = reflect(p, g), rq = reflect(q, g);
    Point rrp = reflect(rp, g);
    CHECK(std::abs(rrp.x - p.x) <= 1e-12 * (1.0 + std::abs(p.x)));
    CHECK(std::abs(rrp.y - p.y) <= 1e-12 * (1.0 + p.y));
    CHECK(dist(rp, rq) == doctest::Approx(dist(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("angle_between examples") {
  Geodesic imag(BoundaryPoint::real(0.0), BoundaryPoint::infinity());
  Geodesic unit(BoundaryPoint::real(-1.0), BoundaryPoint::real(1.0));
  CHECK(angle_between(imag, unit) == doctest::Approx(M_PI / 2).epsilon(1e-14));

  Geodesic shifted(BoundaryPoint::real(0.0), BoundaryPoint::real(2.0));
  double a = angle_between(unit, shifted);
  CHECK(a == doctest::Approx(M_PI / 3).epsilon(1e-12));
  // tangent-direction oracle at the intersection point
  {
    Point x{0.5, std::sqrt(0.75)};
    double d1a = direction_toward(x, unit.e1), d1b = direction_toward(x, unit.e2);
    double d2a = direction_toward(x, shifted.e1);
    double g1 = std::abs(std::remainder(d1a - d2a, 2 * M_PI));
    double g2 = std::abs(std::remainder(d1b - d2a, 2 * M_PI));
    double acute = std::min({g1, g2, M_PI - g1, M_PI - g2});
    CHECK(a == doctest::Approx(acute).epsilon(1e-12));
  }

  CHECK_THROWS_WITH_AS(angle_between(imag, Geodesic(BoundaryPoint::real(1.0),
                                                    BoundaryPoint::real(2.0))),
                       doctest::Contains("misses"), error);
  // shared endpoint
  CHECK_THROWS_AS(angle_between(imag, Geodesic(BoundaryPoint::real(0.0),
                                               BoundaryPoint::real(5.0))),
                  error);
  // disjoint circles
  CHECK_THROWS_AS(angle_between(unit, Geodesic(BoundaryPoint::real(5.0),
                                               BoundaryPoint::real(7.0))),
                  error);
}

TEST_CASE("horoball membership follows the busemann sign convention") {
  Horoball h{BoundaryPoint::infinity(), Point{0, 1}};
  CHECK(horoball_contains(h, Point{5, 2}));
  CHECK(horoball_contains(h, Point{-3, 1}));
  CHECK_FALSE(horoball_contains(h, Point{0, 0.5}));
  CHECK(busemann(h.base, h.anchor, h.anchor) == 0.0);
}

TEST_CASE("geodesic_step and ray_endpoint are consistent") {
  auto rng = rng_for("step");
  std::uniform_real_distribution<double> uth(-M_PI, M_PI), ut(0.05, 5.0);
  for (int i = 0; i < 3000; ++i) {
    Point p = random_point(rng);
    double th = uth(rng), t = ut(rng);
    Point q = geodesic_step(p, th, t);
    CHECK(dist(p, q) == doctest::Approx(t).epsilon(1e-10));
    CHECK(direction_toward(p, q) == doctest::Approx(th).epsilon(1e-7));
    // the ray endpoint lies on the geodesic through p and q
    BoundaryPoint e = ray_endpoint(p, th);
    Point far = geodesic_step(p, th, 25.0);
    CHECK(std::abs(direction_toward(p, e) - th) <= 1e-9);
    if (!e.is_infinity()) CHECK(std::abs(far.x - e.value()) <= 1e-6 * (1 + std::abs(e.value())));
  }
}
