#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "inlim/geometry.h"

using namespace inlim;

TEST_CASE("wrap_unit and circle_distance") {
  CHECK(wrap_unit(1.25) == doctest::Approx(0.25));
  CHECK(wrap_unit(-0.25) == doctest::Approx(0.75));
  CHECK(wrap_unit(-1e-18) < 1.0);
  CHECK(circle_distance(0.95, 0.05) == doctest::Approx(0.1));
  CHECK(circle_distance(0.2, 0.7) == doctest::Approx(0.5));
}

TEST_CASE("carrier membership") {
  CHECK(in_carrier(ManifoldModel::disk(), {0.5, 1.0}));
  CHECK_FALSE(in_carrier(ManifoldModel::disk(), {1.5, 0.0}));
  CHECK(in_carrier(ManifoldModel::annulus(), {1.5, 0.0}));
  CHECK_FALSE(in_carrier(ManifoldModel::annulus(), {0.5, -1.01}));
  CHECK(carrier_distance(ManifoldModel::annulus(), {0.95, 0.0}, {0.05, 0.0}) ==
        doctest::Approx(0.1));
  CHECK(carrier_distance(ManifoldModel::disk(), {0.95, 0.0}, {0.05, 0.0}) ==
        doctest::Approx(0.9));
}

TEST_CASE("collar coordinates") {
  for (ManifoldModel m : {ManifoldModel::disk(), ManifoldModel::annulus()}) {
    CollarCoord c = ambient_to_collar(m, {0.3, -0.25});
    CHECK(c.side == Side::kMinus);
    CHECK(c.s == doctest::Approx(0.75));
    AmbientPoint back = collar_to_ambient(m, c);
    CHECK(back.x == doctest::Approx(0.3));
    CHECK(back.y == doctest::Approx(-0.25));
  }
  SUBCASE("spine points take the plus side at depth 1") {
    CollarCoord c = ambient_to_collar(ManifoldModel::disk(), {0.4, 0.0});
    CHECK(c.side == Side::kPlus);
    CHECK(c.s == 1.0);
  }
  SUBCASE("round trip off the spine") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      AmbientPoint p{ux(rng), uy(rng)};
      if (p.y == 0.0) continue;
      AmbientPoint q = collar_to_ambient(ManifoldModel::disk(),
                                         ambient_to_collar(ManifoldModel::disk(), p));
      CHECK(std::hypot(q.x - p.x, q.y - p.y) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(collar_to_ambient(ManifoldModel::disk(), {0.5, Side::kPlus, 1.5}),
                  std::domain_error);
  CHECK_THROWS_AS(collar_to_ambient(ManifoldModel::disk(), {1.5, Side::kPlus, 0.5}),
                  std::domain_error);
  CHECK(collar_to_ambient(ManifoldModel::annulus(), {1.25, Side::kPlus, 0.5}).x ==
        doctest::Approx(0.25));
  CHECK_THROWS_AS(ambient_to_collar(ManifoldModel::disk(), {0.5, 2.0}),
                  std::out_of_range);
}

TEST_CASE("retraction") {
  AmbientPoint r = retraction(ManifoldModel::annulus(), {1.75, 0.6});
  CHECK(r.x == doctest::Approx(0.75));
  CHECK(r.y == 0.0);
  AmbientPoint rr = retraction(ManifoldModel::annulus(), r);
  CHECK(rr.x == r.x);
  CHECK(rr.y == r.y);
  CHECK_THROWS_AS(retraction(ManifoldModel::disk(), {2.0, 0.0}), std::out_of_range);
}

TEST_CASE("collar reparametrizations") {
  CHECK(phi(0.0) == 0.0);
  CHECK(phi(0.25) == 0.5);
  CHECK(phi(0.75) == 1.0);
  CHECK(phi_delta(0.5, 0.1) == doctest::Approx(0.95));
  CHECK(phi_delta(0.0, 0.3) == 0.0);
  CHECK(phi_delta(1.0, 0.3) == doctest::Approx(1.0));
  CHECK_THROWS_AS(phi(1.5), std::domain_error);
  CHECK_THROWS_AS(phi_delta(0.5, 0.0), std::domain_error);

  SUBCASE("phi_delta is strictly increasing") {
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      double v = phi_delta(i / 1000.0, 0.05);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("upsilon") {
  const ManifoldModel disk = ManifoldModel::disk();
  // The boundary stays put, the inner half-collar collapses onto the spine.
  AmbientPoint b = upsilon(disk, {0.3, 1.0}, std::nullopt);
  CHECK(b.y == doctest::Approx(1.0));
  AmbientPoint inner = upsilon(disk, {0.3, -0.2}, std::nullopt);
  CHECK(inner.y == doctest::Approx(0.0));
  AmbientPoint mid = upsilon(disk, {0.3, 0.75}, std::nullopt);
  CHECK(mid.y == doctest::Approx(0.5));
  AmbientPoint kept = upsilon(disk, {0.3, -0.2}, 0.1);
  CHECK(kept.y < 0.0);
  for (int i = 0; i <= 100; ++i) {
    AmbientPoint p{0.5, -1.0 + 2.0 * i / 100.0};
    AmbientPoint a = upsilon(disk, p, 0.2);
    AmbientPoint c = upsilon(disk, p, std::nullopt);
    CHECK(std::fabs(a.y - c.y) <= 0.1 + 1e-15);
  }
}
