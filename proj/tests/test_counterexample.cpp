#include <doctest.h>

#include <cmath>

#include "horokit/counterexample.hpp"

using namespace horokit;

TEST_CASE("x_sequence: tangency identity in all schedules") {
  CHECK(x_sequence(Schedule::linear(), 3) == 9.0);
  CHECK(x_sequence(Schedule::linear(), 1) == 1.0);
  for (int n = 1; n <= 1000; ++n) {
    CHECK(x_sequence(Schedule::linear(), n) == static_cast<double>(n) * n);  // exact
  }

  // x_1 = r_1 for every schedule (first tangency)
  CHECK(x_sequence(Schedule::geometric(2.0), 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x_sequence(Schedule::with_radii({0.7, 3.0}), 1) == doctest::Approx(0.7));

  // the recurrence identity x_n + a^n = 2a(a^n - 1)/(a - 1)
  for (double a : {1.5, 2.0, 3.0}) {
    for (int n = 1; n <= 40; ++n) {
      double lhs = x_sequence(Schedule::geometric(a), n) + std::pow(a, n);
      double rhs = 2.0 * a * (std::pow(a, n) - 1.0) / (a - 1.0);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }

  CHECK(x_sequence(Schedule::with_radii({1.0, 2.0, 3.0}), 3) == doctest::Approx(9.0));
  CHECK_THROWS_AS(x_sequence(Schedule::linear(), 0), error);
  CHECK_THROWS_AS(Schedule::geometric(1.0), error);
  CHECK_THROWS_AS(Schedule::with_radii({1.0, -2.0}), error);
  try {
    x_sequence(Schedule::with_radii({1.0, 2.0}), 3);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::index_out_of_range);
  }
}

TEST_CASE("build: tangent coordinates and certificates at depth 50") {
  SchottkySpec two = build({Variant::Tangent, Schedule::linear(), 2});
  CHECK(two.pairs[0].plus.center == 3.0);
  CHECK(two.pairs[1].plus.center == 5.0);
  CHECK(two.pairs[0].minus.center == -1.0);
  CHECK(two.pairs[1].minus.center == -4.0);
  CHECK(two.pairs[1].minus.radius == 2.0);

  CHECK(verify_ping_pong(build({Variant::Tangent, Schedule::linear(), 50})).certified);
  CHECK(verify_ping_pong(build({Variant::Opposite, Schedule::linear(), 50})).certified);

  SchottkySpec one = build({Variant::Tangent, Schedule::linear(), 1});
  CHECK(one.pairs.size() == 1);
}

TEST_CASE("build rejects schedules whose disks collide") {
  // opposite variant with a small first radius: the plus disk at x_1 = 0.2
  // with radius 1 overlaps its own minus disk
  CounterexampleConfig bad{Variant::Opposite, Schedule::with_radii({0.2}), 1};
  try {
    build(bad);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::ping_pong_failed);
    CHECK(std::string(e.what()).find("pair 1") != std::string::npos);
  }
}

TEST_CASE("special points match the closed forms via the intersection solver") {
  CounterexampleConfig cfg{Variant::Tangent, Schedule::linear(), 100};
  SpecialPoints one = special_points(cfg, 1);
  CHECK(one.P.x == doctest::Approx(2.75).epsilon(1e-12));
  CHECK(one.P.y == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-12));
  CHECK(one.z.x == 3.0);
  CHECK(one.z.y == 1.0);

  SpecialPoints ten = special_points(cfg, 10);
  CHECK(ten.N.y == doctest::Approx(10.0 * std::sqrt(1.0 - 100.0 / (121.0 * 121.0)))
                      .epsilon(1e-12));
  CHECK(ten.N.y == doctest::Approx(9.9658).epsilon(1e-4));

  for (int n = 1; n <= 100; ++n) {
    SpecialPoints sp = special_points(cfg, n);
    double xn = x_sequence(cfg.schedule, n);
    double s = xn + 2.0 * n + 1.0;
    CHECK(std::abs(sp.P.x - (2.0 * n + 1.0 - 1.0 / s)) <= 1e-9);
    CHECK(std::abs(sp.P.y - std::sqrt(1.0 - 1.0 / (s * s))) <= 1e-9);
    CHECK(std::abs(sp.N.x - (-xn + n * static_cast<double>(n) / s)) <= 1e-9);
    CHECK(std::abs(sp.N.y - n * std::sqrt(1.0 - n * static_cast<double>(n) / (s * s))) <= 1e-9);
  }
  CHECK_THROWS_AS(special_points(cfg, 0), error);
  CHECK_THROWS_AS(special_points(cfg, 101), error);
}

TEST_CASE("gamma_n sends P_n into the minus disk along the axis") {
  CounterexampleConfig cfg{Variant::Tangent, Schedule::linear(), 10};
  SchottkySpec spec = build(cfg);
  for (int n = 1; n <= 10; ++n) {
    SpecialPoints sp = special_points(cfg, n);
    const Mobius& g = spec.pairs[static_cast<std::size_t>(n) - 1].gamma;
    Point image = apply(g, sp.P);
    // the image stays on the axis, at depth ell_n - dist(P_n, N_n) past N_n
    CHECK(dist_to_geodesic(image, axis_of(cfg, n)) <= 1e-9);
    double overshoot = translation_length(g) - dist(sp.P, sp.N);
    CHECK(overshoot >= 0.0);
    CHECK(dist(image, sp.N) == doctest::Approx(overshoot).epsilon(1e-8));
    // and gamma_n . o lands within dist(o, P_n) of that image
    Point go = apply(g, Point{0.0, 1.0});
    CHECK(dist(go, image) == doctest::Approx(dist(Point{0.0, 1.0}, sp.P)).epsilon(1e-9));
  }
}

TEST_CASE("report rows: lengths increase, linear depth decays, geometric grows") {
  CounterexampleConfig lin{Variant::Tangent, Schedule::linear(), 60};
  auto rows = report(lin);
  REQUIRE(rows.size() == 60);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].ell_n > rows[i - 1].ell_n);  // increasing translation lengths
  }
  // matrix-computed heights decay like 1/(4n) for the linear schedule
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].im_gamma_o < rows[i - 1].im_gamma_o);
  CHECK(rows[59].im_gamma_o * 4.0 * 60.0 == doctest::Approx(1.0).epsilon(0.2));

  // d(P_n, z_n) <= 1 from the very first row, decreasing to 0
  for (const RowReport& r : rows) CHECK(r.d_Pn_zn <= 1.0);
  CHECK(rows[59].d_Pn_zn < rows[0].d_Pn_zn);

  // d(gamma_n o, N_n) <= 3 ln n holds from a small reported n0 on
  SchottkySpec spec = build(lin);
  int n0 = 1;
  for (int n = static_cast<int>(rows.size()); n >= 2; --n) {
    const Mobius& g = spec.pairs[static_cast<std::size_t>(n) - 1].gamma;
    double d = dist(apply(g, Point{0.0, 1.0}), special_points(lin, n).N);
    if (d > 3.0 * std::log(static_cast<double>(n))) {
      n0 = n + 1;
      break;
    }
  }
  CHECK(n0 == 6);  // frozen: d ~ 2 ln(2n) + c crosses below 3 ln n at n = 6

  // busemann at infinity is 1-Lipschitz: the matrix-computed ordinate stays
  // within the d(gamma_n o, N_n) budget of the N_n ordinate
  for (int n = 1; n <= 60; ++n) {
    const RowReport& r = rows[static_cast<std::size_t>(n) - 1];
    const Mobius& g = spec.pairs[static_cast<std::size_t>(n) - 1].gamma;
    double budget = dist(apply(g, Point{0.0, 1.0}), r.N_n);
    CHECK(std::abs(std::log(r.im_gamma_o) - std::log(r.N_n.y)) <= budget + 1e-9);
  }

  CounterexampleConfig geo{Variant::Tangent, Schedule::geometric(2.0), 25};
  auto grows = report(geo);
  for (std::size_t i = 4; i < grows.size(); ++i)
    CHECK(grows[i].im_gamma_o > grows[i - 1].im_gamma_o);
  CHECK(grows[24].im_gamma_o > 1000.0);

  // asymptotic ordinate law for the geometric schedule at n = 30
  CounterexampleConfig geo30{Variant::Tangent, Schedule::geometric(2.0), 30};
  SpecialPoints sp = special_points(geo30, 30);
  double target = std::pow(2.0, 60.0) * 8.0 / 9.0;
  CHECK(sp.N.y * sp.N.y / target == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("crossing angles: closed form, decay, and the orthogonal variant") {
  CounterexampleConfig lin{Variant::Tangent, Schedule::linear(), 1000};
  double th3 = crossing_angle(lin, 3);
  CHECK(th3 == doctest::Approx(std::acos(0.125)).epsilon(1e-12));
  CHECK(th3 == doctest::Approx(1.44547).epsilon(1e-5));

  // tangent-direction oracle at the intersection with the imaginary axis
  {
    Geodesic ax = axis_of(lin, 3);
    Geodesic imag(BoundaryPoint::real(0.0), BoundaryPoint::infinity());
    Point x = geodesic_intersection(imag, ax);
    double d1 = direction_toward(x, BoundaryPoint::infinity());
    double d2 = direction_toward(x, ax.e1);
    double gap = std::abs(std::remainder(d1 - d2, 2 * M_PI));
    double acute = std::min(gap, M_PI - gap);
    CHECK(th3 == doctest::Approx(acute).epsilon(1e-12));
  }

  for (int n = 10; n <= 1000; ++n) {
    double th = crossing_angle(lin, n);
    double xn = x_sequence(lin.schedule, n);
    CHECK(std::abs(th - std::acos((xn - (2.0 * n + 1.0)) / (xn + 2.0 * n + 1.0))) <= 1e-9);
    CHECK(th <= 3.0 / std::sqrt(static_cast<double>(n)));
  }

  CounterexampleConfig opp{Variant::Opposite, Schedule::linear(), 100};
  for (int n = 1; n <= 100; ++n)
    CHECK(std::abs(crossing_angle(opp, n) - M_PI / 2.0) <= 1e-12);
}

TEST_CASE("one-sidedness certificates by schedule and depth") {
  // geometric: certified at positive depth, minus side empty
  OneSidedness geo = one_sidedness_certificate({Variant::Tangent, Schedule::geometric(2.0), 12},
                                               1.0, 1.0, 2);
  CHECK(geo.status == CertStatus::Certified);
  CHECK(geo.census.minus_count == 0);
  CHECK(geo.census.plus_count >= 1);
  CHECK(geo.attained_depth > 1.0);

  // above the attained depth: withheld, not an error
  OneSidedness deep = one_sidedness_certificate({Variant::Tangent, Schedule::geometric(2.0), 12},
                                                50.0, 1.0, 2);
  CHECK(deep.status == CertStatus::WithheldNoDepth);
  CHECK(deep.census.plus_count == 0);

  // linear: no orbit point below o's horoball, so withheld at D = 1
  OneSidedness lin = one_sidedness_certificate({Variant::Tangent, Schedule::linear(), 20},
                                               1.0, 1.0, 2);
  CHECK(lin.status == CertStatus::WithheldNoDepth);
  CHECK(lin.census.plus_count == 0);
  CHECK(lin.census.minus_count == 0);
  CHECK(lin.attained_depth == doctest::Approx(0.0));

  // plus_count at fixed (D, R) never decreases in n_max
  long long prev = -1;
  for (int N : {5, 10, 15, 20}) {
    OneSidedness c = one_sidedness_certificate({Variant::Tangent, Schedule::geometric(2.0), N},
                                               1.0, 1.0, 2);
    CHECK(c.census.plus_count >= prev);
    prev = c.census.plus_count;
  }
}
