#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "inlim/rotation.h"

using namespace inlim;

namespace {

double lift(double b, double w, double x) {
  return x + w + b / kTwoPi * std::sin(kTwoPi * x);
}

// Closed-form monotone hulls for b > 1: the running max only changes at the
// local maxima x_max + k, the running min at the local minima x_min + k.
struct ExactHulls {
  double b, w, x_max, x_min;
  ExactHulls(double b_, double w_) : b(b_), w(w_) {
    x_max = std::acos(-1.0 / b) / kTwoPi;
    x_min = 1.0 - x_max;
  }
  double upper(double x) const {
    return std::max(lift(b, w, x), lift(b, w, x_max + std::floor(x - x_max)));
  }
  double lower(double x) const {
    return std::min(lift(b, w, x), lift(b, w, x_min + std::ceil(x - x_min)));
  }
};

}  // namespace

TEST_CASE("rotation number of monotone lifts") {
  auto rigid = [](double x) { return x + 0.3; };
  CHECK(rotation_number_monotone(rigid, 0.0, 1000) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(rotation_number_monotone(rigid, 17.4, 1000000) == doctest::Approx(0.3).epsilon(1e-12));
  auto circle = [](double x) { return lift(0.8, 0.2, x); };
  double r1 = rotation_number_monotone(circle, 0.0, 20000);
  double r2 = rotation_number_monotone(circle, 0.37, 20000);
  CHECK(std::fabs(r1 - r2) <= 2.0 / 20000);
  auto folding = [](double x) { return lift(3.0, 0.2, x); };
  CHECK_THROWS_AS(rotation_number_monotone(folding, 0.0, 100), std::invalid_argument);
  auto degree_two = [](double x) { return 2.0 * x; };
  CHECK_THROWS_AS(rotation_number_monotone(degree_two, 0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(rotation_number_monotone(rigid, 0.0, 0), std::invalid_argument);
}

TEST_CASE("grid lift") {
  GridLift g({0.1, 0.4, 1.1});
  CHECK(g(0.25) == doctest::Approx(0.25));
  CHECK(g(1.25) == doctest::Approx(1.25));
  CHECK(g(-0.75) == doctest::Approx(-0.75));
  CHECK(g(0.75) == doctest::Approx(0.75));
  CHECK_THROWS_AS(GridLift({0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("envelopes match the closed-form hulls") {
  for (double b : {1.5, 3.0, 6.0}) {
    for (double w : {0.0, 0.3, 0.77}) {
      const Family f = Family::standard(b, w);
      Envelopes env = envelopes(f, 2048);
      ExactHulls exact(b, w);
      CHECK(env.modulus == doctest::Approx((1.0 + b) / 2048));
      for (int i = 0; i <= 1000; ++i) {
        double x = -1.0 + 3.0 * i / 1000.0;
        CHECK(std::fabs(env.upper(x) - exact.upper(x)) <= env.modulus);
        CHECK(std::fabs(env.lower(x) - exact.lower(x)) <= env.modulus);
        CHECK(env.lower(x) <= lift(b, w, x) + env.modulus);
        CHECK(env.upper(x) >= lift(b, w, x) - env.modulus);
      }
    }
  }
  CHECK_THROWS_AS(envelopes(Family::tent(2.0)), std::invalid_argument);
}

TEST_CASE("rotation interval") {
  SUBCASE("invertible members have a single rotation number") {
    RotationInterval r = rotation_interval(Family::standard(0.0, 0.3), 10000);
    CHECK(r.lo == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(r.hi == doctest::Approx(0.3).epsilon(1e-12));
    RotationInterval s = rotation_interval(Family::standard(0.8, 0.2), 10000);
    CHECK(s.width() <= 2.0 * s.half_width);
  }
  SUBCASE("noninvertible members against the exact hulls") {
    for (auto [b, w] : {std::pair{2.0, 0.3}, std::pair{3.0, 0.5}, std::pair{5.0, 0.1}}) {
      ExactHulls exact(b, w);
      const std::size_t n = 20000;
      double lo = rotation_number_monotone([&](double x) { return exact.lower(x); }, 0.0, n);
      double hi = rotation_number_monotone([&](double x) { return exact.upper(x); }, 0.0, n);
      RotationInterval r = rotation_interval(Family::standard(b, w), n);
      CHECK(std::fabs(r.lo - lo) <= r.half_width + 1.0 / n);
      CHECK(std::fabs(r.hi - hi) <= r.half_width + 1.0 / n);
      CHECK(r.lo < r.hi);
    }
  }
  SUBCASE("symmetric member") {
    RotationInterval r = rotation_interval(Family::standard(3.0, 0.5), 20000);
    CHECK(r.lo + r.hi == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(r.contains(0.5, 0.0));
    CHECK_FALSE(r.contains(0.05, r.half_width));
  }
}

TEST_CASE("tongues") {
  TongueWindow win{0.0, 1.0, 0.4, 0.6};
  TongueRaster t = tongue_raster(0.5, win, 4, 21, 4000, 1024, 2);
  CHECK(t.cells.size() == 84);
  CHECK(t.omega_at(10) == doctest::Approx(0.5));
  CHECK(t.b_at(0) == doctest::Approx(0.125));
  for (int ib = 0; ib < 4; ++ib) CHECK(t.at(ib, 10).member);
  CHECK_FALSE(t.at(0, 0).member);
  // The 0/1 tongue near omega = 0 is entered only once b is large.
  TongueRaster zero = tongue_raster(0.0, {0.0, 4.0, 0.0, 0.2}, 8, 10, 4000, 1024, 1);
  std::size_t prev = 0;
  for (int ib = 0; ib < 8; ++ib) {
    std::size_t row = 0;
    for (int iw = 0; iw < 10; ++iw) row += zero.at(ib, iw).member;
    CHECK(row >= prev);
    prev = row;
  }
  CHECK(prev > 0);
  CHECK_THROWS_AS(tongue_raster(0.5, {0.0, 9.0, 0.0, 1.0}, 2, 2, 100), std::invalid_argument);
  CHECK_THROWS_AS(tongue_raster(0.5, {0.0, 1.0, 0.5, 1.5}, 2, 2, 100), std::invalid_argument);
}

TEST_CASE("annulus rotation") {
  FattenedMap rigid(ManifoldModel::annulus(), Family::standard(0.0, 0.3), 0.01, 0.01);
  // The radial coordinate is eps cos(.), so the drift averages out up to delta eps.
  CHECK(std::fabs(annulus_rotation_number(rigid, {0.2, 0.5}, 10000) - 0.3) <= 0.01 * 0.01 + 1e-3);

  FattenedMap wide(ManifoldModel::annulus(), Family::standard(2.0, 0.3), 0.01, 0.01);
  AnnulusRotationSettings s;
  s.seeds = 12;
  s.n = 5000;
  s.grid_res = 1024;
  s.threads = 2;
  AnnulusRotationReport rep = annulus_rotation_check(wide, s);
  CHECK(rep.all_inside());
  CHECK(rep.orbits.size() == 12);
  REQUIRE(rep.lo_end.has_value());
  REQUIRE(rep.hi_end.has_value());
  CHECK(rep.endpoints_attained());
  CHECK(rep.sampled_min() <= rep.sampled_max());

  FattenedMap narrow(ManifoldModel::annulus(), Family::standard(0.5, 0.3), 0.01, 0.01);
  s.seeds = 4;
  AnnulusRotationReport r2 = annulus_rotation_check(narrow, s);
  CHECK_FALSE(r2.lo_end.has_value());
}

TEST_CASE("periodic orbits with prescribed rotation") {
  FattenedMap h(ManifoldModel::annulus(), Family::standard(3.0, 0.5), 0.01, 0.01);
  auto orb = find_rotation_orbit(h, 1, 2);
  REQUIRE(orb.has_value());
  CHECK(orb->residual < 1e-10);
  CHECK(orb->p == 1);
  CHECK(orb->q == 2);
  AmbientPoint z = orb->point;
  AmbientPoint w = h.apply_lift(h.apply_lift(z));
  CHECK(std::fabs(w.x - z.x - 1.0) <= 1e-9);
  CHECK(std::fabs(w.y - z.y) <= 1e-9);
  // 1/20 lies outside the rotation interval [1/6, 5/6].
  CHECK_FALSE(find_rotation_orbit(h, 1, 20).has_value());
}

TEST_CASE("boundary push") {
  CHECK(collar_bump(0.5, 0.1) == 0.0);
  CHECK(collar_bump(1.0, 0.1) == 1.0);
  CHECK(collar_bump(-1.0, 0.1) == 1.0);
  CHECK(collar_bump(0.95, 0.1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(collar_bump(0.5, 0.0), std::invalid_argument);

  FattenedMap h(ManifoldModel::annulus(), Family::standard(3.0, 0.5), 0.02, 0.02);
  RotationInterval iv = rotation_interval(h.family(), 10000);
  BoundaryPushMap push = boundary_push(h, iv, 0.1);
  CHECK(boundary_push_rotation_number(push, {0.2, 1.0}, 1000) == doctest::Approx(iv.hi));
  CHECK(boundary_push_rotation_number(push, {0.2, -1.0}, 1000) == doctest::Approx(iv.lo));
  AmbientPoint inner{0.3, 0.0};
  CHECK(boundary_push_rotation_number(push, inner, 2000) ==
        doctest::Approx(annulus_rotation_number(h, inner, 2000)));
  AmbientPoint q = push({0.9, 1.0});
  CHECK(q.x == doctest::Approx(wrap_unit(0.9 + iv.hi)));
  CHECK(q.y == 1.0);
  FattenedMap disk(ManifoldModel::disk(), Family::tent(1.5), 0.02, 0.02);
  CHECK_THROWS_AS(boundary_push(disk, iv, 0.1), std::invalid_argument);
}
