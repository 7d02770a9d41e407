#include <doctest.h>

#include <cmath>
#include <random>

#include "horokit/mobius.hpp"

using namespace horokit;

namespace {

std::mt19937_64 rng_for(const char* tag) {
  std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
  return std::mt19937_64(seq);
}

Mobius random_mobius(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return Mobius::rotation(u(rng)) * Mobius::diagonal(u(rng)) * Mobius::unipotent(u(rng));
}

}  // namespace

TEST_CASE("apply: identity, translation, inversion") {
  Mobius id;
  CHECK(apply(id, Point{0.3, 1.7}).x == doctest::Approx(0.3));
  CHECK(apply(id, BoundaryPoint::infinity()).is_infinity());

  Mobius trans(1, 1, 0, 1);
  BoundaryPoint t0 = apply(trans, BoundaryPoint::real(0.0));
  CHECK(t0.value() == doctest::Approx(1.0));

  Mobius j(0, -1, 1, 0);
  Point p = apply(j, Point{0, 2});
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(0.5));
  CHECK(apply(j, BoundaryPoint::real(0.0)).is_infinity());
  CHECK(apply(j, BoundaryPoint::infinity()).value() == doctest::Approx(0.0));
}

TEST_CASE("group laws hold mod sign") {
  auto rng = rng_for("laws");
  for (int i = 0; i < 5000; ++i) {
    Mobius m = random_mobius(rng), n = random_mobius(rng);
    CHECK(mobius_gap(m * m.inverse(), Mobius::identity()) <= 1e-12);
    CHECK(mobius_gap((m * n).inverse(), n.inverse() * m.inverse()) <= 1e-12);
    Point z{0.4, 1.3};
    Point lhs = apply(m * n, z);
    Point rhs = apply(m, apply(n, z));
    CHECK(std::abs(lhs.x - rhs.x) <= 1e-10 * (1 + std::abs(lhs.x)));
    CHECK(std::abs(lhs.y - rhs.y) <= 1e-10 * (1 + lhs.y));
  }
}

TEST_CASE("classification by trace") {
  CHECK(classify(Mobius(1, 1, 0, 1)) == IsometryKind::Parabolic);
  CHECK(classify(Mobius(2, 0, 0, 0.5)) == IsometryKind::Hyperbolic);
  CHECK(classify(Mobius(std::cos(1.0), -std::sin(1.0), std::sin(1.0), std::cos(1.0))) ==
        IsometryKind::Elliptic);
  CHECK(classify(Mobius::identity()) == IsometryKind::Identity);
}

TEST_CASE("fixed points") {
  auto fp = fixed_points(Mobius(2, 0, 0, 0.5));
  REQUIRE(fp.size() == 2);
  // infinity attracting (|a| > |d|), listed last
  CHECK(fp[1].is_infinity());
  CHECK(fp[0].value() == doctest::Approx(0.0));

  auto pp = fixed_points(Mobius(1, 1, 0, 1));
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].is_infinity());

  // quadratic-root oracle on c z^2 + (d - a) z - b = 0 for [[2,1],[1,1]]
  auto hp = fixed_points(Mobius(2, 1, 1, 1));
  REQUIRE(hp.size() == 2);
  long double s = std::sqrt(5.0L);
  double r1 = static_cast<double>((1.0L + s) / 2.0L);
  double r2 = static_cast<double>((1.0L - s) / 2.0L);
  CHECK(std::min(hp[0].value(), hp[1].value()) == doctest::Approx(r2).epsilon(1e-12));
  CHECK(std::max(hp[0].value(), hp[1].value()) == doctest::Approx(r1).epsilon(1e-12));

  CHECK(fixed_points(Mobius::rotation(1.0)).empty());
  CHECK_THROWS_AS(fixed_points(Mobius::identity()), error);
}

TEST_CASE("translation length") {
  double t = 1.7;
  CHECK(translation_length(Mobius::diagonal(t)) == doctest::Approx(t).epsilon(1e-12));

  Mobius m(2, 0, 0, 0.5);
  double l = translation_length(m);
  CHECK(l == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
  // cross-check: displacement of a point on the axis
  CHECK(l == doctest::Approx(dist(Point{0, 1}, apply(m, Point{0, 1}))).epsilon(1e-12));

  CHECK_THROWS_AS(translation_length(Mobius(1, 1, 0, 1)), error);

  auto rng = rng_for("conj");
  for (int i = 0; i < 3000; ++i) {
    Mobius g = random_mobius(rng);
    Mobius h = Mobius::diagonal(0.9);
    CHECK(translation_length(g * h * g.inverse()) ==
          doctest::Approx(translation_length(h)).epsilon(1e-12));
  }
}

TEST_CASE("from_axis_length covers the three endpoint configurations") {
  double t = 0.8;
  CHECK(mobius_gap(from_axis_length(BoundaryPoint::real(0.0), BoundaryPoint::infinity(), t),
                   Mobius::diagonal(t)) <= 1e-12);
  CHECK(mobius_gap(from_axis_length(BoundaryPoint::infinity(), BoundaryPoint::real(0.0), t),
                   Mobius::diagonal(-t)) <= 1e-12);

  Mobius m = from_axis_length(BoundaryPoint::real(-1.0), BoundaryPoint::real(1.0), 1.0);
  CHECK(translation_length(m) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(repelling_fixed_point(m).value() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(attracting_fixed_point(m).value() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(from_axis_length(BoundaryPoint::real(2.0), BoundaryPoint::real(2.0), 1.0),
                  error);
  CHECK_THROWS_AS(from_axis_length(BoundaryPoint::real(0.0), BoundaryPoint::real(1.0), 0.0),
                  error);
}

TEST_CASE("pairing_isometry on the tangent family's first pair") {
  Geodesic A(BoundaryPoint::real(2.0), BoundaryPoint::real(4.0));    // circle(3, 1)
  Geodesic B(BoundaryPoint::real(-2.0), BoundaryPoint::real(0.0));   // circle(-1, 1)
  Mobius g = pairing_isometry(BoundaryPoint::real(3.0), BoundaryPoint::real(-1.0), A, B);

  // crossing points from the circle-intersection solver
  Geodesic axis(BoundaryPoint::real(3.0), BoundaryPoint::real(-1.0));
  Point P = geodesic_intersection(axis, A);
  Point N = geodesic_intersection(axis, B);
  CHECK(P.x == doctest::Approx(2.75).epsilon(1e-12));
  CHECK(P.y == doctest::Approx(std::sqrt(15.0) / 4).epsilon(1e-12));
  CHECK(N.x == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(N.y == doctest::Approx(std::sqrt(15.0) / 4).epsilon(1e-12));

  CHECK(translation_length(g) == doctest::Approx(std::log(15.0)).epsilon(1e-9));
  CHECK(translation_length(g) == doctest::Approx(2.7081).epsilon(1e-4));
  Point gp = apply(g, P);
  CHECK(gp.x == doctest::Approx(N.x).epsilon(1e-9));
  CHECK(gp.y == doctest::Approx(N.y).epsilon(1e-9));

  auto fps = fixed_points(g);
  REQUIRE(fps.size() == 2);
  CHECK(repelling_fixed_point(g).value() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(attracting_fixed_point(g).value() == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("pairing_isometry error paths") {
  Geodesic A(BoundaryPoint::real(2.0), BoundaryPoint::real(4.0));
  // zero length: A = B
  CHECK_THROWS_AS(pairing_isometry(BoundaryPoint::real(3.0), BoundaryPoint::real(-1.0), A, A),
                  error);
  try {
    pairing_isometry(BoundaryPoint::real(3.0), BoundaryPoint::real(-1.0), A, A);
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_length);
  }
  // axis (0, infinity) misses the circle (1, 2)
  Geodesic C(BoundaryPoint::real(1.0), BoundaryPoint::real(2.0));
  Geodesic B(BoundaryPoint::real(-2.0), BoundaryPoint::real(0.0));
  try {
    pairing_isometry(BoundaryPoint::real(0.0), BoundaryPoint::infinity(), C, B);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::axis_miss);
  }
}

TEST_CASE("pairing_isometry maps A onto B on balanced configurations") {
  // Balanced: the circles' ideal endpoints have equal ratios in
  // axis-normalized coordinates, so the translation matches them exactly.
  auto rng = rng_for("balanced");
  std::uniform_real_distribution<double> upq(-10.0, 10.0), ua(0.05, 2.0), umu(1.5, 40.0);
  int done = 0;
  while (done < 500) {
    double p = upq(rng), q = upq(rng);
    if (std::abs(p - q) < 0.5) continue;
    Mobius S = q > p ? Mobius(q, p, 1, 1) : Mobius(q, -p, 1, -1);  // 0 -> p, inf -> q
    double a1 = ua(rng), a2 = ua(rng), mu = umu(rng);
    auto bp = [&](double x) { return apply(S, BoundaryPoint::real(x)); };
    Geodesic A(bp(-a1), bp(a2)), B(bp(-mu * a1), bp(mu * a2));
    Mobius g = pairing_isometry(BoundaryPoint::real(p), BoundaryPoint::real(q), A, B);
    Geodesic img = apply(g, A);
    double i1 = std::min(img.e1.value(), img.e2.value());
    double i2 = std::max(img.e1.value(), img.e2.value());
    double b1 = std::min(B.e1.value(), B.e2.value());
    double b2 = std::max(B.e1.value(), B.e2.value());
    CHECK(std::abs(i1 - b1) <= 1e-9 * (1 + std::abs(b1)));
    CHECK(std::abs(i2 - b2) <= 1e-9 * (1 + std::abs(b2)));
    CHECK(translation_length(g) == doctest::Approx(std::log(mu)).epsilon(1e-9));
    CHECK(repelling_fixed_point(g).value() == doctest::Approx(p).epsilon(1e-8));
    CHECK(attracting_fixed_point(g).value() == doctest::Approx(q).epsilon(1e-8));
    ++done;
  }
}
