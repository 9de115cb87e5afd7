#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "inlim/invlim.h"

using namespace inlim;

TEST_CASE("thread validation") {
  const Family f = Family::tent(2.0);
  CHECK_NOTHROW(Thread(f, {0.4, 0.2, 0.1}));
  CHECK_NOTHROW(Thread(f, {0.4, 0.8, 0.4}));
  CHECK_THROWS_AS(Thread(f, {0.4, 0.3}), InvalidThread);
  CHECK_THROWS_AS(Thread(f, {}), InvalidThread);
  Thread loose(f, {0.4, 0.2 + 1e-6}, 1e-5);
  CHECK(loose.max_defect() == doctest::Approx(2e-6));
  Thread circ(Family::standard(0.0, 0.25), {0.1, 1.85});
  CHECK(circ[1] == doctest::Approx(0.85));
}

TEST_CASE("d_infty") {
  const Family f = Family::tent(2.0);
  Thread u(f, {0.4, 0.2, 0.1});
  Thread v(f, {0.4, 0.8, 0.4});
  // Terms: 0, 0.6/2, 0.3/3.
  CHECK(d_infty(u, v) == doctest::Approx(0.3));
  CHECK(d_infty(u, u) == 0.0);
  Thread w(f, {0.4, 0.2});
  CHECK_THROWS_AS(d_infty(u, w), std::invalid_argument);

  std::vector<int> a{0, 5, 1}, b{0, 1, 1};
  auto d = [](int x, int y) { return std::abs(x - y); };
  CHECK(d_infty(std::span<const int>(a), std::span<const int>(b), d) == doctest::Approx(0.5));
}

TEST_CASE("shift and unshift are inverse") {
  const Family f = Family::tent(1.7);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Thread u = random_thread(f, 12, rng);
    CHECK(u.max_defect() <= 1e-9);
    Thread up = unshift(u, RandomPreimage{rng});
    Thread back = shift(up);
    CHECK(back.size() == u.size());
    CHECK(d_infty(back, u) <= 1e-9);
  }
}

TEST_CASE("preimage policies") {
  const Family f = Family::tent(2.0);
  Thread t(f, {0.5});
  Thread l = extend_backward(t, Leftmost{});
  Thread r = extend_backward(t, Rightmost{});
  CHECK(l[1] == doctest::Approx(0.25));
  CHECK(r[1] == doctest::Approx(0.75));
  CHECK(extend_backward(t, BranchPreimage{'R'})[1] == doctest::Approx(0.75));
  CHECK(extend_backward(t, BranchPreimage{'L'})[1] == doctest::Approx(0.25));

  // 0.9 lies above the invariant core [0, 0.75] of T_1.5.
  Thread high(Family::tent(1.5), {0.9});
  CHECK_THROWS_AS(extend_backward(high, Leftmost{}), NoPreimageError);
  // In the core, 0.3 has only one preimage (0.2); 0.8 lies outside.
  Thread low(Family::tent(1.5), {0.3});
  CHECK_THROWS_AS(extend_backward(low, BranchPreimage{'R'}), NoPreimageError);
  CHECK(extend_backward(low, BranchPreimage{'L'})[1] == doctest::Approx(0.2));
  CHECK_THROWS_AS(extend_backward(Thread(Family::standard(1.0, 0.2), {0.3}),
                                  BranchPreimage{'L'}),
                  std::invalid_argument);
}

TEST_CASE("random threads on the circle") {
  std::mt19937_64 rng(9);
  Thread t = random_thread(Family::standard(2.0, 0.4), 20, rng);
  CHECK(t.size() == 20);
  CHECK(t.max_defect() <= 1e-9);
  for (double x : t.entries()) {
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK_THROWS_AS(random_thread(Family::tent(2.0), 0, rng), std::invalid_argument);
}

TEST_CASE("fat_apply keeps the parameter") {
  FatPoint p{0.3, Family::tent(1.3)};
  FatPoint q = fat_apply(p);
  CHECK(q.x == doctest::Approx(0.39));
  CHECK(q.param == p.param);
}

TEST_CASE("epsilon audit") {
  std::vector<double> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(i / 49.0);
  std::span<const double> s(xs);
  auto d = [](double a, double b) { return std::fabs(a - b); };
  auto id = [](double x) { return x; };
  auto constant = [](double) { return 0.0; };
  EpsilonAudit none = epsilon_map_audit(s, id, d, d, 1e-6);
  CHECK(none.colliding_pairs == 0);
  CHECK(none.epsilon == 0.0);
  EpsilonAudit all = epsilon_map_audit(s, constant, d, d, 1e-6);
  CHECK(all.colliding_pairs == 50 * 49 / 2);
  CHECK(all.epsilon == doctest::Approx(1.0));
  // Folding collides x and 1-x.
  auto fold = [](double x) { return std::min(x, 1.0 - x); };
  EpsilonAudit folded = epsilon_map_audit(s, fold, d, d, 1e-9);
  CHECK(folded.colliding_pairs == 25);
  CHECK(folded.epsilon == doctest::Approx(1.0));
  CHECK_THROWS_AS(epsilon_map_audit(s.first(1), id, d, d, 1e-6), std::invalid_argument);
}

TEST_CASE("planar audit matches the all-pairs audit") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<AmbientPoint> pts(400);
  for (auto& p : pts) p = {u(rng), u(rng)};
  auto g = [](const AmbientPoint& p) {
    return AmbientPoint{std::round(p.x * 8) / 8, std::round(p.y * 8) / 8};
  };
  auto e = [](const AmbientPoint& a, const AmbientPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
  };
  EpsilonAudit brute = epsilon_map_audit(std::span<const AmbientPoint>(pts), g, e, e, 1e-3);
  EpsilonAudit fast = epsilon_map_audit_planar(pts, g, 1e-3);
  CHECK(fast.colliding_pairs == brute.colliding_pairs);
  CHECK(fast.epsilon == brute.epsilon);
}

TEST_CASE("brown stages are 1/(j+2)-maps") {
  const Family f = Family::tent(2.0);
  std::mt19937_64 rng(17);
  std::vector<Thread> sample;
  for (int i = 0; i < 400; ++i) sample.push_back(random_thread(f, 24, rng));
  auto d = [](const Thread& a, const Thread& b) { return d_infty(a, b); };
  auto e = [](const FatPoint& a, const FatPoint& b) { return std::fabs(a.x - b.x); };
  for (std::size_t j : {0u, 2u, 5u}) {
    auto g = [j](const Thread& t) { return brown_stage(j, t); };
    EpsilonAudit a = epsilon_map_audit(std::span<const Thread>(sample), g, d, e, 1e-3);
    // Entries up to j follow from x_j; the tail contributes at most 1/(j+2).
    double lip = std::pow(2.0, static_cast<double>(j)) * 1e-3;
    CHECK(a.epsilon <= 1.0 / static_cast<double>(j + 2) + lip);
  }
  Thread shortt(f, {0.4});
  CHECK_THROWS_AS(brown_stage(1, shortt), std::invalid_argument);
  SliceHomeo flip = [](double x, const Family&) { return 1.0 - x; };
  CHECK(brown_stage(0, shortt, flip).x == doctest::Approx(0.6));
}
