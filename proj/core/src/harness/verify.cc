#include "inlim/harness/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "inlim/harness/commands.h"
#include "inlim/harness/config.h"
#include "inlim/harness/output.h"
#include "inlim/invlim.h"
#include "inlim/rotation.h"
#include "inlim/suspension.h"

namespace inlim::harness {
namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Body = std::function<Outcome(unsigned)>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Wraps a body with timing and an optional runtime budget in seconds.
Check make(std::string id, std::string name, double budget, bool advisory,
           Body body) {
  Check c{id, name, advisory, {}};
  c.run = [id, name, budget, advisory, body](unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = body(threads);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    CheckResult r{id, name, o.passed, advisory, o.detail, secs};
    if (budget > 0.0 && secs >= budget) {
      r.passed = false;
      r.detail += "; over the " + num(budget) + " s budget";
    }
    return r;
  };
  return c;
}

constexpr std::uint64_t kCheckSeed = 20240611;

// ---------------------------------------------------------------- acceptance

Outcome ac_entropy(unsigned) {
  const double log2 = std::log(2.0);
  for (int n = 4; n <= 14; ++n) {
    std::size_t count = tent_periodic_points(2.0, n).size();
    double est = entropy_estimate(2.0, n);
    if (count != (std::size_t{1} << n) || std::fabs(est - log2) > 1e-15) {
      return {false, "s=2 n=" + std::to_string(n) + ": count " +
                         std::to_string(count) + ", estimate " + num(est)};
    }
  }
  double worst = 0.0;
  for (double s : {1.3, 1.5, 1.8}) {
    worst = std::max(worst, std::fabs(entropy_estimate(s, 14) - std::log(s)));
  }
  return {worst <= 0.08, "s=2 exact for n=4..14; max |h14 - log s| = " +
                             num(worst) + " (limit 0.08)"};
}

Outcome ac_stabilization(unsigned) {
  int wrong = 0;
  for (int i = 0; i < 50; ++i) {
    double s_hi = 1.0 + (i + 0.5) / 50.0;
    double s_lo = (i + 0.5) / 50.0;
    auto m_hi = stabilization_index(Family::tent(s_hi), 64, 1e-9);
    auto m_lo = stabilization_index(Family::tent(s_lo), 64, 1e-9);
    if (!m_hi || *m_hi != 1) ++wrong;
    if (m_lo) ++wrong;
  }
  return {wrong == 0, std::to_string(wrong) + " of 100 grid values misclassified"};
}

Outcome ac_epsilon_bound(unsigned) {
  std::mt19937_64 rng(kCheckSeed);
  std::size_t violations = 0;
  double worst_ratio = 0.0;
  const std::size_t length = 24;
  for (const Family& fam : {Family::tent(2.0), Family::quadratic(1.8)}) {
    for (std::size_t k = 0; k <= 6; ++k) {
      for (int pair = 0; pair < 1000; ++pair) {
        Thread u = random_thread(fam, length, rng);
        std::vector<double> head(u.entries().begin(),
                                 u.entries().begin() + static_cast<long>(k) + 1);
        Thread v(fam, head);
        while (v.size() < length) v = extend_backward(v, RandomPreimage{rng});
        double d = d_infty(u, v);
        double bound = 1.0 / static_cast<double>(k + 2);
        worst_ratio = std::max(worst_ratio, d / bound);
        if (d > bound) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(violations) +
                               " violations over 14000 pairs; max d/bound " +
                               num(worst_ratio)};
}

Outcome ac_disk_injective(unsigned) {
  FattenedMap map(ManifoldModel::disk(), Family::tent(1.8), 0.01, 0.01);
  std::vector<AmbientPoint> grid;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 50; ++j) grid.push_back({i / 199.0, -1.0 + 2.0 * j / 49.0});
  }
  EpsilonAudit audit = epsilon_map_audit_planar(grid, map.as_function(), 1e-9);
  return {audit.colliding_pairs == 0,
          std::to_string(audit.colliding_pairs) + " colliding pairs on 200x50"};
}

Outcome ac_semiconjugacy(unsigned threads) {
  std::string detail;
  bool ok = true;
  for (double s : {1.5, 1.8, 2.0}) {
    FattenedMap map(ManifoldModel::disk(), Family::tent(s), 0.01, 0.01);
    auto cloud = attract_cloud(map, {100, 1000, 100}, kCheckSeed, threads).points();
    double res = semiconjugacy_residual(map, cloud);
    double bound = 2 * 0.01 + s * (0.01 + 0.01);
    ok = ok && res <= bound;
    detail += "s=" + num(s) + ": " + num(res) + " <= " + num(bound) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome ac_periodic(unsigned) {
  FattenedMap map(ManifoldModel::disk(), Family::tent(2.0), 0.01, 0.01);
  PeriodicReport rep = periodic_match(map, 6, 1e-9);
  bool ok = true;
  double worst = 0.0;
  std::string counts;
  for (const PeriodMatch& pm : rep.periods) {
    ok = ok && pm.ok() && pm.expected == (std::size_t{1} << pm.period) &&
         pm.max_residual < 1e-6;
    worst = std::max(worst, pm.max_residual);
    counts += std::to_string(pm.matched) + "/" + std::to_string(pm.expected) + " ";
  }
  return {ok, "matched " + counts + "max residual " + num(worst)};
}

ContinuitySettings ac7_settings(unsigned threads) {
  ContinuitySettings cs;
  cs.model = ManifoldModel::disk();
  cs.cloud = {200, 1000, 100};
  cs.rng_seed = kCheckSeed;
  cs.threads = threads;
  return cs;
}

std::vector<double> tent_grid(double lo, int steps, double step) {
  std::vector<double> g;
  for (int i = 0; i <= steps; ++i) g.push_back(lo + i * step);
  return g;
}

Outcome ac_continuity(unsigned threads) {
  auto tent = [](double s) { return Family::tent(s); };
  ContinuitySettings cs = ac7_settings(threads);
  double coarse = continuity_scan(tent, tent_grid(1.2, 70, 0.01), cs).max_distance();
  double fine = continuity_scan(tent, tent_grid(1.2, 140, 0.005), cs).max_distance();
  std::vector<double> jump{0.99, 1.00};
  double gap = continuity_scan(tent, jump, cs).max_distance();
  bool ok = coarse < 0.05 && fine <= coarse && gap > 0.2;
  return {ok, "max d_H " + num(coarse) + " (step 0.01), " + num(fine) +
                  " (step 0.005); d_H(0.99,1.00) = " + num(gap)};
}

Outcome ac_rotation(unsigned threads) {
  const std::pair<double, double> points[] = {{0.0, 0.3}, {0.8, 0.2}, {2.0, 0.3}, {3.0, 0.5}};
  bool ok = true;
  std::string detail;
  for (auto [b, w] : points) {
    FattenedMap map(ManifoldModel::annulus(), Family::standard(b, w), 0.01, 0.01);
    AnnulusRotationSettings st;
    st.n = 100000;
    st.rng_seed = kCheckSeed;
    st.threads = threads;
    AnnulusRotationReport r = annulus_rotation_check(map, st);
    bool good = r.all_inside() && (b <= 1.0 || (r.lo_end && r.hi_end &&
                                                r.endpoints_attained()));
    ok = ok && good;
    detail += "(" + num(b) + "," + num(w) + "): [" + num(r.interval.lo) + "," +
              num(r.interval.hi) + "] sampled [" + num(r.sampled_min()) + "," +
              num(r.sampled_max()) + "]";
    if (r.lo_end && r.lo_end->attained && r.hi_end && r.hi_end->attained) {
      detail += " ends " + std::to_string(r.lo_end->p) + "/" +
                std::to_string(r.lo_end->q) + "," + std::to_string(r.hi_end->p) +
                "/" + std::to_string(r.hi_end->q);
    }
    detail += good ? "; " : " FAIL; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome ac_tongue(unsigned threads) {
  TongueRaster raster = tongue_raster(0.0, {0.0, 1.0, 0.0, 0.25}, 100, 100, 10000,
                                      kDefaultEnvelopeGrid, threads);
  const double db = 1.0 / 100, dw = 0.25 / 100;
  std::size_t agree = 0, exact = 0;
  for (const TongueCell& c : raster.cells) {
    bool oracle = c.omega <= c.b / kTwoPi;
    if (oracle == c.member) {
      ++exact;
      ++agree;
    } else if (std::fabs(c.omega - c.b / kTwoPi) <= dw + db / kTwoPi) {
      ++agree;
    }
  }
  double frac = static_cast<double>(agree) / raster.cells.size();
  return {frac >= 0.99, num(100 * frac) + "% within one cell (" +
                            std::to_string(exact) + " of 10000 exact)"};
}

Outcome ac_invariant_circle(unsigned threads) {
  const double eps = 0.01;
  FattenedMap map(ManifoldModel::annulus(), Family::standard(0.8, 0.2), 0.01, eps);
  auto cloud = attract_cloud(map, {200, 1000, 100}, kCheckSeed, threads).points();
  constexpr int kBins = 200;
  std::vector<double> lo(kBins, INFINITY), hi(kBins, -INFINITY);
  for (const AmbientPoint& p : cloud) {
    int bin = std::min(kBins - 1, static_cast<int>(wrap_unit(p.x) * kBins));
    lo[bin] = std::min(lo[bin], p.y);
    hi[bin] = std::max(hi[bin], p.y);
  }
  double spread = 0.0;
  for (int i = 0; i < kBins; ++i) {
    if (hi[i] >= lo[i]) spread = std::max(spread, hi[i] - lo[i]);
  }
  const std::size_t n = 100000;
  RotationInterval iv = rotation_interval(map.family(), n);
  bool ok = spread <= 2 * eps && iv.width() <= 2.0 / n;
  return {ok, "max spread per theta bin " + num(spread) + " (limit " +
                  num(2 * eps) + "); interval width " + num(iv.width()) +
                  " (limit " + num(2.0 / n) + ")"};
}

Outcome ac_henon(unsigned threads) {
  const double eps = 0.001;
  FattenedMap map(ManifoldModel::disk(), Family::quadratic(1.8), 0.001, eps);
  CloudSettings cs{100, 1000, 100};
  auto fat = attract_cloud(map, cs, kCheckSeed, threads).points();
  std::size_t escaped = 0;
  auto henon = henon_cloud(1.8, 0.001, cs, kCheckSeed, &escaped);
  if (henon.empty()) return {false, "every Henon seed escaped"};
  std::vector<AmbientPoint> mapped;
  mapped.reserve(henon.size());
  for (const AmbientPoint& h : henon) mapped.push_back(henon_to_disk(map, h));
  double d = hausdorff(fat, mapped);
  return {d <= 0.05, "d_H = " + num(d) + " (limit 0.05), " +
                         std::to_string(escaped) + " escaped draws"};
}

// ---------------------------------------------------------------- invariants

Outcome inv_retraction(unsigned) {
  std::mt19937_64 rng(kCheckSeed);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-1.0, 1.0);
  for (ManifoldModel m : {ManifoldModel::disk(), ManifoldModel::annulus()}) {
    for (int i = 0; i < 10000; ++i) {
      AmbientPoint p{ux(rng), uy(rng)};
      AmbientPoint r1 = retraction(m, p);
      AmbientPoint r2 = retraction(m, r1);
      if (r1.x != r2.x || r1.y != r2.y) return {false, "retraction not idempotent"};
    }
  }
  return {true, "R(R(p)) == R(p) on 2x10^4 points"};
}

Outcome inv_collar(unsigned) {
  double worst = 0.0, push = 0.0;
  const double delta = 0.05;
  std::vector<AmbientPoint> grid;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      AmbientPoint p{i / 99.0, -1.0 + 2.0 * j / 99.0};
      grid.push_back(p);
      AmbientPoint back = collar_to_ambient(ManifoldModel::disk(),
                                            ambient_to_collar(ManifoldModel::disk(), p));
      worst = std::max(worst, std::hypot(back.x - p.x, back.y - p.y));
      AmbientPoint a = upsilon(ManifoldModel::disk(), p, delta);
      AmbientPoint b = upsilon(ManifoldModel::disk(), p, std::nullopt);
      push = std::max(push, std::hypot(a.x - b.x, a.y - b.y));
    }
  }
  EpsilonAudit audit = epsilon_map_audit_planar(
      grid, [delta](const AmbientPoint& p) { return upsilon(ManifoldModel::disk(), p, delta); },
      1e-9);
  bool ok = worst <= 1e-12 && push <= delta / 2 + 1e-15 && audit.colliding_pairs == 0;
  return {ok, "round trip " + num(worst) + ", |upsilon_d - upsilon| " + num(push) +
                  " <= d/2, " + std::to_string(audit.colliding_pairs) + " collisions"};
}

Outcome inv_degree_one(unsigned) {
  double worst = 0.0;
  std::mt19937_64 rng(kCheckSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double b : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    Family f = Family::standard(b, 0.37);
    Envelopes env = envelopes(f, 1024);
    for (int i = 0; i < 200; ++i) {
      double x = u(rng);
      for (int k = -3; k <= 3; ++k) {
        worst = std::max(worst, std::fabs(lift_eval(f, x + k) - lift_eval(f, x) - k));
        worst = std::max(worst, std::fabs(env.upper(x + k) - env.upper(x) - k));
        worst = std::max(worst, std::fabs(env.lower(x + k) - env.lower(x) - k));
      }
    }
  }
  return {worst <= 1e-12, "max |F(x+k) - F(x) - k| = " + num(worst)};
}

// Arc containment on the circle: the inner arc may carry a different lift.
bool box_contains(const Family& f, const IntervalBox& outer, IntervalBox inner) {
  if (f.is_circle() && inner.lo < outer.lo - 1e-12) {
    inner.lo += 1.0;
    inner.hi += 1.0;
  }
  return outer.contains(inner, 1e-12);
}

Outcome inv_image_monotone(unsigned) {
  std::mt19937_64 rng(kCheckSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  for (const Family& f : {Family::tent(1.7), Family::quadratic(1.4), Family::standard(2.0, 0.3)}) {
    IntervalBox ph = phase_interval(f);
    for (int i = 0; i < 500; ++i) {
      double a = ph.lo + u(rng) * ph.width(), b = ph.lo + u(rng) * ph.width();
      if (a > b) std::swap(a, b);
      double c = a + u(rng) * (b - a), d = c + u(rng) * (b - c);
      if (!box_contains(f, image_interval(f, {a, b}), image_interval(f, {c, d}))) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " of 1500 nested boxes not nested in image"};
}

Outcome inv_tent_points(unsigned) {
  double worst = 0.0, closest = 1.0;
  for (double s : {1.3, 1.7, 2.0}) {
    for (int n = 1; n <= 10; ++n) {
      auto pts = tent_periodic_points(s, n);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        double y = pts[i].x;
        for (int k = 0; k < n; ++k) y = eval(Family::tent(s), y);
        worst = std::max(worst, std::fabs(y - pts[i].x));
        if (i) closest = std::min(closest, pts[i].x - pts[i - 1].x);
      }
    }
  }
  bool ok = worst < 1e-10 && closest > 1e-10;
  for (int n = 4; n <= 16 && ok; ++n) {
    ok = std::fabs(entropy_estimate(2.0, n) - std::log(2.0)) <= 1e-15;
  }
  return {ok, "max |T^n x - x| " + num(worst) + ", min gap " + num(closest) +
                  ", h(2,n) = log 2 for n <= 16"};
}

Outcome inv_threads(unsigned) {
  std::mt19937_64 rng(kCheckSeed);
  double shift_err = 0.0;
  int bad = 0;
  double tri = 0.0;
  for (const Family& f : {Family::tent(1.8), Family::quadratic(1.6), Family::standard(0.6, 0.3)}) {
    for (int i = 0; i < 1000; ++i) {
      Thread u = random_thread(f, 12, rng);
      Thread s = shift(u);
      Thread e = extend_backward(u, RandomPreimage{rng});
      Thread se = shift(e);
      if (s.max_defect() > s.tol() || e.max_defect() > e.tol()) ++bad;
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (se[k + 1] != u[k]) ++bad;
      }
      shift_err = std::max(shift_err, phase_distance(f, s[0], eval(f, u[0])));
      Thread us = shift(unshift(u, Leftmost{}));
      for (std::size_t k = 1; k < u.size(); ++k) {
        if (us[k] != u[k]) ++bad;
      }
      Thread v = random_thread(f, 12, rng), w = random_thread(f, 12, rng);
      if (d_infty(u, v) != d_infty(v, u)) ++bad;
      tri = std::max(tri, d_infty(u, w) - d_infty(u, v) - d_infty(v, w));
      FatPoint fp{u[0], f};
      if (!(fat_apply(fp).param == f)) ++bad;
    }
  }
  bool ok = bad == 0 && shift_err <= kDefaultThreadTol && tri <= 1e-15;
  return {ok, std::to_string(bad) + " failures; pi0 shift error " + num(shift_err) +
                  "; triangle excess " + num(tri)};
}

Outcome inv_fattening(unsigned threads) {
  std::string detail;
  bool ok = true;
  for (const Family& f : {Family::tent(1.8), Family::quadratic(1.5)}) {
    const double delta = 0.01, eps = 0.01;
    FattenedMap map(ManifoldModel::disk(), f, delta, eps);
    std::vector<AmbientPoint> grid;
    double conv = 0.0;
    bool interior = true;
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        AmbientPoint p{i / 99.0, -1.0 + 2.0 * j / 99.0};
        grid.push_back(p);
        AmbientPoint q = map(p);
        interior = interior && q.x > 0.0 && q.x < 1.0 && q.y > -1.0 && q.y < 1.0;
        conv = std::max(conv, std::hypot(q.x - map.spine_map(p.x), q.y));
      }
    }
    EpsilonAudit audit = epsilon_map_audit_planar(grid, map.as_function(), 1e-9);
    auto cloud = attract_cloud(map, {50, 500, 100}, kCheckSeed, threads).points();
    double res = semiconjugacy_residual(map, cloud);
    double bound = 2 * delta + lipschitz_constant(f) * (delta + eps);
    bool good = audit.colliding_pairs == 0 && interior && conv <= 2 * delta + eps &&
                res <= bound;
    ok = ok && good;
    detail += f.describe() + ": " + std::to_string(audit.colliding_pairs) +
              " collisions, sup d(H, (g,0)) " + num(conv) + ", residual " + num(res) +
              (interior ? "" : ", left interior") + "; ";
  }
  BoxCover prev(ManifoldModel::disk(), 128, true);
  FattenedMap map(ManifoldModel::disk(), Family::tent(1.8), 0.01, 0.01);
  for (int n = 1; n <= 6; ++n) {
    BoxCover next = attract_cover(map, 128, n, threads);
    if (!next.subset_of(prev)) {
      ok = false;
      detail += "cover " + std::to_string(n) + " not nested; ";
    }
    prev = std::move(next);
  }
  detail += "covers nested";
  return {ok, detail};
}

Outcome inv_rotation(unsigned threads) {
  const std::size_t n = 2000;
  std::mt19937_64 rng(kCheckSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Envelopes env = envelopes(Family::standard(2.0, 0.3));
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    double r = rotation_number_monotone(env.upper, u(rng), n);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  bool ok = hi - lo <= 2.0 / n;
  std::string detail = "base-point spread " + num(hi - lo) + "; ";

  double worst_shift = 0.0;
  for (double b : {0.0, 0.7, 2.0}) {
    for (double w : {0.1, 0.45}) {
      const double d = 0.05;
      RotationInterval a = rotation_interval(Family::standard(b, w), n);
      RotationInterval c = rotation_interval(Family::standard(b, w + d), n);
      double tol = 2.0 / n + 2 * a.half_width;
      bool monotone = c.lo >= a.lo - tol && c.hi >= a.hi - tol;
      if (b == 0.0) {
        worst_shift = std::max({worst_shift, std::fabs(c.lo - a.lo - d),
                                std::fabs(c.hi - a.hi - d)});
      }
      ok = ok && monotone;
    }
  }
  ok = ok && worst_shift <= 2.0 / n;
  detail += "omega-monotone; b=0 shift error " + num(worst_shift) + "; ";

  TongueWindow window{0.0, 2.0, 0.0, 1.0};
  TongueRaster t1 = tongue_raster(1.0 / 3.0, window, 8, 16, n, 1024, threads);
  TongueRaster t2 = tongue_raster(2.0 / 3.0, window, 8, 16, n, 1024, threads);
  int mismatched = 0;
  for (int ib = 0; ib < 8; ++ib) {
    for (int iw = 0; iw < 16; ++iw) {
      if (t1.at(ib, iw).member != t2.at(ib, 15 - iw).member) ++mismatched;
    }
  }
  ok = ok && mismatched == 0;
  detail += std::to_string(mismatched) + " tongue symmetry mismatches";
  return {ok, detail};
}

Outcome inv_harness(unsigned threads) {
  ExperimentConfig cfg;
  cfg.seed = 99;
  cfg.s = 1.8;
  cfg.seeds = 20;
  cfg.keep = 20;
  cfg.transient = 200;
  cfg.threads = threads;
  bool ok = parse_config(serialize_config(cfg)) == cfg;
  std::string detail = ok ? "config round trip; " : "config round trip failed; ";

  auto base = std::filesystem::temp_directory_path() /
              ("inlim_verify_" + std::to_string(fnv1a64(serialize_config(cfg)) & 0xffff));
  std::string sums[2];
  for (int run = 0; run < 2; ++run) {
    cfg.out_dir = (base / std::to_string(run)).string();
    CommandResult r = cmd_attractor(cfg);
    std::string csv = read_file(r.out_dir / "cloud.csv");
    sums[run] = hex64(fnv1a64(csv));
    CsvTable table = parse_csv(csv);
    ok = ok && table.rows.size() == cfg.seeds * cfg.keep &&
         table.header == std::vector<std::string>{"seed_index", "iter", "x_or_theta", "y_or_r"};
  }
  std::error_code ec;
  std::filesystem::remove_all(base, ec);
  ok = ok && sums[0] == sums[1];
  detail += "rerun checksums " + sums[0] + " / " + sums[1];
  return {ok, detail};
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks = {
      make("AC1", "entropy", 5.0, false, ac_entropy),
      make("AC2", "stabilization dichotomy", 1.0, false, ac_stabilization),
      make("AC3", "epsilon-map bound", 0.0, false, ac_epsilon_bound),
      make("AC4", "disk fattening injectivity", 0.0, false, ac_disk_injective),
      make("AC5", "semiconjugacy", 10.0, false, ac_semiconjugacy),
      make("AC6", "periodic bijection", 0.0, false, ac_periodic),
      make("AC7", "Hausdorff continuity and failure at s=1", 120.0, false, ac_continuity),
      make("AC8", "rotation identity", 120.0, false, ac_rotation),
      make("AC9", "tongue T_0", 60.0, false, ac_tongue),
      make("AC10", "invariant circle", 0.0, false, ac_invariant_circle),
      make("AC11", "Henon proximity", 0.0, true, ac_henon),
  };
  return checks;
}

const std::vector<Check>& invariant_checks() {
  static const std::vector<Check> checks = {
      make("INV-GEO-1", "retraction idempotent", 0.0, false, inv_retraction),
      make("INV-GEO-2", "collar round trip and upsilon", 0.0, false, inv_collar),
      make("INV-FAM-1", "degree-one lifts", 0.0, false, inv_degree_one),
      make("INV-FAM-2", "image_interval monotone", 0.0, false, inv_image_monotone),
      make("INV-FAM-3", "tent periodic points", 0.0, false, inv_tent_points),
      make("INV-INV-1", "thread operations", 0.0, false, inv_threads),
      make("INV-SUS-1", "fattened disk map", 0.0, false, inv_fattening),
      make("INV-ROT-1", "rotation properties", 0.0, false, inv_rotation),
      make("INV-HAR-1", "config and determinism", 0.0, false, inv_harness),
  };
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    unsigned threads) {
  std::vector<CheckResult> out;
  for (const Check& c : checks) {
    try {
      out.push_back(c.run(threads));
    } catch (const std::exception& e) {
      out.push_back({c.id, c.name, false, c.advisory,
                     std::string("exception: ") + e.what(), 0.0});
    }
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  const char* tag = r.passed ? "PASS" : (r.advisory ? "ADVISORY-FAIL" : "FAIL");
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(tag) + " " + r.id + " " + r.name + ": " + r.detail + " (" +
         secs + " s)";
}

bool suite_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.passed || r.advisory;
  });
}

}  // namespace inlim::harness
