#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "inlim/families.h"

using namespace inlim;

namespace {

double iterate(const Family& f, double x, int n) {
  for (int i = 0; i < n; ++i) x = eval(f, x);
  return x;
}

// Fixed points of f^n counted by sign changes of f^n(x) - x on a fine grid.
std::size_t brute_fixed_count(const Family& f, int n, int samples) {
  IntervalBox ph = phase_interval(f);
  std::size_t count = 0;
  double prev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    double x = ph.lo + ph.width() * i / samples;
    double g = iterate(f, x, n) - x;
    if (g == 0.0) {
      ++count;
    } else if (i > 0 && prev != 0.0 && (g < 0.0) != (prev < 0.0)) {
      ++count;
    }
    prev = g;
  }
  return count;
}

}  // namespace

TEST_CASE("factories validate parameters") {
  CHECK_THROWS_AS(Family::tent(2.1), std::invalid_argument);
  CHECK_THROWS_AS(Family::tent(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Family::quadratic(2.5), std::invalid_argument);
  CHECK_THROWS_AS(Family::standard(9.0, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(Family::standard(1.0, 1.2), std::invalid_argument);
  CHECK_NOTHROW(Family::standard(9.0, 0.2, 10.0));
  CHECK(family_kind_from_string("quadratic") == FamilyKind::kQuadratic);
  CHECK(to_string(FamilyKind::kStandard) == "standard");
  CHECK_THROWS_AS(family_kind_from_string("logistic"), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CHECK(eval(Family::tent(1.5), 0.2) == doctest::Approx(0.3));
  CHECK(eval(Family::tent(1.5), 0.8) == doctest::Approx(0.3));
  CHECK(eval(Family::quadratic(1.0), 0.5) == doctest::Approx(0.75));
  CHECK(quadratic_box_radius(2.0) == doctest::Approx(2.0));
  CHECK(quadratic_box_radius(0.0) == doctest::Approx(1.0));
  CHECK(eval(Family::standard(0.0, 0.3), 0.9) == doctest::Approx(0.2));
  CHECK(lift_eval(Family::standard(0.0, 0.3), 0.9) == doctest::Approx(1.2));
  CHECK(lift_eval(Family::standard(1.0, 0.0), 0.25) ==
        doctest::Approx(0.25 + 1.0 / kTwoPi));
  CHECK_THROWS_AS(eval(Family::tent(1.0), 1.5), std::domain_error);
  CHECK_THROWS_AS(eval(Family::quadratic(1.0), 3.0), std::domain_error);
  CHECK_THROWS_AS(lift_eval(Family::tent(1.0), 0.5), std::invalid_argument);
}

TEST_CASE("image_interval against dense sampling") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Family& f : {Family::tent(1.7), Family::quadratic(1.3), Family::quadratic(-0.1)}) {
    IntervalBox ph = phase_interval(f);
    for (int trial = 0; trial < 50; ++trial) {
      double a = ph.lo + u(rng) * ph.width(), b = ph.lo + u(rng) * ph.width();
      if (a > b) std::swap(a, b);
      double lo = INFINITY, hi = -INFINITY;
      for (int i = 0; i <= 4000; ++i) {
        double y = eval(f, a + (b - a) * i / 4000.0);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
      IntervalBox img = image_interval(f, {a, b});
      CHECK(img.lo == doctest::Approx(lo).epsilon(1e-3));
      CHECK(img.hi == doctest::Approx(hi).epsilon(1e-3));
      CHECK(img.lo <= lo + 1e-12);
      CHECK(img.hi >= hi - 1e-12);
    }
  }
  SUBCASE("standard family wraps to the whole circle for wide boxes") {
    IntervalBox img = image_interval(Family::standard(0.5, 0.1), {0.0, 1.0});
    CHECK(img.lo == 0.0);
    CHECK(img.hi == 1.0);
    IntervalBox small = image_interval(Family::standard(0.0, 0.3), {0.1, 0.2});
    CHECK(small.lo == doctest::Approx(0.4));
    CHECK(small.hi == doctest::Approx(0.5));
  }
  SUBCASE("circle images of nested arcs are nested modulo 1") {
    const Family f = Family::standard(2.0, 0.3);
    IntervalBox outer = image_interval(f, {0.6, 0.95});
    IntervalBox inner = image_interval(f, {0.7, 0.8});
    if (inner.lo < outer.lo) {
      inner.lo += 1.0;
      inner.hi += 1.0;
    }
    CHECK(outer.contains(inner, 1e-12));
  }
  SUBCASE("quadratic below -1/4 clips and says so") {
    IntervalBox img = image_interval(Family::quadratic(-0.5), phase_interval(Family::quadratic(-0.5)));
    CHECK(img.clipped);
  }
}

TEST_CASE("stabilization") {
  CHECK(stabilization_index(Family::tent(1.5)) == 1);
  CHECK(stabilization_index(Family::tent(1.99)) == 1);
  CHECK_FALSE(stabilization_index(Family::tent(0.5)).has_value());
  CHECK_FALSE(stabilization_index(Family::tent(0.999)).has_value());
  // Surjective already: nothing to shrink.
  CHECK(stabilization_index(Family::tent(2.0)) == 0);
  // Collapses to {0} after one step.
  CHECK(stabilization_index(Family::tent(0.0)) == 1);
  // f(X) = [0, s/2] already contains the fixed point 0 and is invariant.
  IntervalBox core = stabilized_interval(Family::tent(1.5));
  CHECK(core.lo == 0.0);
  CHECK(core.hi == doctest::Approx(0.75));
  CHECK_THROWS_AS(stabilization_index(Family::tent(1.5), 0), std::invalid_argument);
}

TEST_CASE("preimages") {
  for (const Family& f : {Family::tent(1.8), Family::quadratic(1.7), Family::standard(2.0, 0.3)}) {
    double y = f.is_circle() ? 0.4 : eval(f, phase_interval(f).lo + 0.3);
    auto pre = preimages(f, y, phase_interval(f));
    REQUIRE_FALSE(pre.empty());
    CHECK(std::is_sorted(pre.begin(), pre.end()));
    for (double x : pre) CHECK(phase_distance(f, eval(f, x), y) <= 1e-9);
  }
  CHECK(preimages(Family::tent(1.5), 0.9, {0.0, 1.0}).empty());
  CHECK(preimages(Family::standard(0.0, 0.3), 0.1, {0.0, 1.0}).size() == 1);
}

TEST_CASE("tent periodic points") {
  for (double s : {1.3, 1.5, 1.8, 2.0}) {
    for (int n = 1; n <= 8; ++n) {
      auto pts = tent_periodic_points(s, n);
      for (const auto& p : pts) {
        CHECK(std::fabs(iterate(Family::tent(s), p.x, n) - p.x) < 1e-10);
        CHECK(p.word.size() == static_cast<std::size_t>(n));
      }
      for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].x - pts[i - 1].x > 1e-10);
      CHECK(pts.size() == brute_fixed_count(Family::tent(s), n, 1 << 18));
    }
  }
  for (int n = 1; n <= 16; ++n) CHECK(tent_periodic_points(2.0, n).size() == (std::size_t{1} << n));
  CHECK(tent_periodic_points(2.0, 1).front().word.str() == "L");
  CHECK_THROWS_AS(tent_periodic_points(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(tent_periodic_points(1.5, 0), std::invalid_argument);
}

TEST_CASE("entropy") {
  for (int n = 4; n <= 16; ++n) CHECK(std::fabs(entropy_estimate(2.0, n) - std::log(2.0)) <= 1e-15);
  CHECK(std::fabs(entropy_estimate(1.8, 14) - std::log(1.8)) <= 0.08);
  CHECK_THROWS_AS(entropy_estimate(1.5, 3), std::invalid_argument);
}

TEST_CASE("quadratic periodic points") {
  // a = 2 is conjugate to the full tent map.
  for (int n = 1; n <= 6; ++n) {
    auto pts = quadratic_periodic_points(2.0, n);
    CHECK(pts.size() == (std::size_t{1} << n));
    for (double x : pts) CHECK(std::fabs(iterate(Family::quadratic(2.0), x, n) - x) < 1e-8);
  }
  CHECK(quadratic_periodic_points(1.3, 3).size() ==
        brute_fixed_count(Family::quadratic(1.3), 3, 1 << 18));
}

TEST_CASE("itinerary") {
  CHECK(itinerary(Family::tent(2.0), 0.2, 4).str() == "LLRL");
  CHECK(itinerary(Family::tent(2.0), 0.5, 2).str() == "CR");
  CHECK(itinerary(Family::quadratic(1.0), 0.5, 1).str() == "R");
  CHECK_THROWS_AS(itinerary(Family::standard(1.0, 0.1), 0.2, 3), std::invalid_argument);
  CHECK_THROWS_AS(SymbolWord("LXR"), std::invalid_argument);
}

TEST_CASE("lipschitz constants") {
  CHECK(lipschitz_constant(Family::tent(1.7)) == doctest::Approx(1.7));
  CHECK(lipschitz_constant(Family::quadratic(2.0)) == doctest::Approx(4.0));
  CHECK(lipschitz_constant(Family::standard(2.0, 0.1)) == doctest::Approx(3.0));
}
