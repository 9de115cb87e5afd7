#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "inlim/parallel.h"
#include "inlim/rotation.h"

namespace inlim {
namespace {

constexpr int kRootScan = 2048;
constexpr int kBisections = 80;
constexpr int kNewtonIterations = 50;
constexpr double kJacobianStep = 1e-7;

template <class LiftMap>
double lifted_rotation(const LiftMap& step, AmbientPoint z, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rotation number needs n >= 1");
  z.x = wrap_unit(z.x);
  const double start = z.x;
  double turns = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    z = step(z);
    double k = std::floor(z.x);
    turns += k;
    z.x -= k;
  }
  return (turns + (z.x - start)) / static_cast<double>(n);
}

// F~^q(z) - z - (p, 0) on the universal cover.
AmbientPoint orbit_defect(const FattenedMap& map, AmbientPoint z, long p,
                          long q) {
  AmbientPoint w = z;
  for (long i = 0; i < q; ++i) w = map.apply_lift(w);
  return {w.x - z.x - static_cast<double>(p), w.y - z.y};
}

double norm(AmbientPoint v) { return std::hypot(v.x, v.y); }

struct SpineRoot {
  double x;
  double slope;
};

// Roots of f~^q(x) - x - p on [0,1), by sign scan and bisection.
std::vector<SpineRoot> spine_roots(const Family& fam, long p, long q) {
  auto h = [&](double x) {
    double y = x;
    for (long i = 0; i < q; ++i) y = lift_eval(fam, y);
    return y - x - static_cast<double>(p);
  };
  std::vector<SpineRoot> out;
  double x0 = 0.0;
  double h0 = h(x0);
  for (int i = 1; i <= kRootScan; ++i) {
    double x1 = static_cast<double>(i) / kRootScan;
    double h1 = h(x1);
    if (h0 == 0.0 || (h0 < 0.0) != (h1 < 0.0)) {
      double a = x0, b = x1, ha = h0;
      for (int it = 0; it < kBisections && b - a > 1e-15; ++it) {
        double m = 0.5 * (a + b);
        double hm = h(m);
        if ((hm < 0.0) == (ha < 0.0)) {
          a = m;
          ha = hm;
        } else {
          b = m;
        }
      }
      out.push_back({0.5 * (a + b), (h1 - h0) * kRootScan});
    }
    x0 = x1;
    h0 = h1;
  }
  std::sort(out.begin(), out.end(), [](const SpineRoot& a, const SpineRoot& b) {
    return std::fabs(a.slope) > std::fabs(b.slope);
  });
  return out;
}

AmbientPoint clamp_annulus(AmbientPoint z) {
  return {z.x, std::clamp(z.y, -1.0, 1.0)};
}

}  // namespace

double annulus_rotation_number(const FattenedMap& map, AmbientPoint start,
                               std::size_t n) {
  if (!map.model().is_annulus()) {
    throw std::invalid_argument("annulus rotation needs the annulus model");
  }
  return lifted_rotation(
      [&map](const AmbientPoint& z) { return map.apply_lift(z); }, start, n);
}

double boundary_push_rotation_number(const BoundaryPushMap& map,
                                     AmbientPoint start, std::size_t n) {
  return lifted_rotation(
      [&map](const AmbientPoint& z) { return map.apply_lift(z); }, start, n);
}

std::optional<EndpointAttainment> find_rotation_orbit(const FattenedMap& map,
                                                      long p, long q,
                                                      double tol) {
  if (!map.model().is_annulus()) {
    throw std::invalid_argument("rotation orbits need the annulus model");
  }
  if (q < 1) throw std::invalid_argument("period q must be >= 1");
  const Family& fam = map.family();
  for (const SpineRoot& root : spine_roots(fam, p, q)) {
    // Seed the recorder coordinate from the predecessor on the spine orbit.
    double prev = root.x;
    for (long i = 0; i + 1 < q; ++i) prev = lift_eval(fam, prev);
    AmbientPoint z{root.x,
                   map.eps() * std::cos(kTwoPi * (prev - map.theta0()))};
    AmbientPoint g = orbit_defect(map, z, p, q);
    double res = norm(g);
    for (int it = 0; it < kNewtonIterations && res > tol * 1e-2; ++it) {
      std::array<AmbientPoint, 2> cols{};
      for (int c = 0; c < 2; ++c) {
        AmbientPoint zp = z;
        double& coord = c == 0 ? zp.x : zp.y;
        double step = (c == 1 && coord + kJacobianStep > 1.0) ? -kJacobianStep
                                                              : kJacobianStep;
        coord += step;
        AmbientPoint gp = orbit_defect(map, zp, p, q);
        cols[c] = {(gp.x - g.x) / step, (gp.y - g.y) / step};
      }
      double det = cols[0].x * cols[1].y - cols[1].x * cols[0].y;
      if (!(std::fabs(det) > 1e-300)) break;
      AmbientPoint dz{(-g.x * cols[1].y + g.y * cols[1].x) / det,
                      (-cols[0].x * g.y + cols[0].y * g.x) / det};
      bool improved = false;
      double lambda = 1.0;
      for (int half = 0; half < 30; ++half, lambda *= 0.5) {
        AmbientPoint trial =
            clamp_annulus({z.x + lambda * dz.x, z.y + lambda * dz.y});
        AmbientPoint gt = orbit_defect(map, trial, p, q);
        if (norm(gt) < res) {
          z = trial;
          g = gt;
          res = norm(gt);
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    if (res < tol) {
      EndpointAttainment out;
      out.p = p;
      out.q = q;
      out.residual = res;
      out.point = {wrap_unit(z.x), z.y};
      return out;
    }
  }
  return std::nullopt;
}

bool AnnulusRotationReport::all_inside() const {
  return std::all_of(orbits.begin(), orbits.end(),
                     [](const OrbitRotation& o) { return o.inside; });
}

bool AnnulusRotationReport::endpoints_attained() const {
  auto ok = [](const std::optional<EndpointAttainment>& e) {
    return !e || e->attained;
  };
  return ok(lo_end) && ok(hi_end);
}

double AnnulusRotationReport::sampled_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& o : orbits) m = std::min(m, o.rho);
  return m;
}

double AnnulusRotationReport::sampled_max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& o : orbits) m = std::max(m, o.rho);
  return m;
}

AnnulusRotationReport annulus_rotation_check(
    const FattenedMap& map, const AnnulusRotationSettings& settings) {
  if (!map.model().is_annulus()) {
    throw std::invalid_argument("annulus_rotation_check needs the annulus model");
  }
  if (settings.seeds == 0 || settings.n == 0) {
    throw std::invalid_argument("annulus rotation check needs seeds and n");
  }
  AnnulusRotationReport report;
  report.interval = rotation_interval(map.family(), settings.n, settings.grid_res);
  report.orbits.resize(settings.seeds);
  parallel_for(settings.seeds, settings.threads, [&](std::size_t i) {
    OrbitRotation& o = report.orbits[i];
    o.seed_index = i;
    o.start = cloud_seed_point(settings.rng_seed, i);
    o.rho = annulus_rotation_number(map, o.start, settings.n);
    o.inside = report.interval.contains(o.rho, settings.inclusion_tol);
  });

  if (map.family().primary() <= 1.0) return report;
  const RotationInterval& iv = report.interval;
  auto attain = [&](double target) {
    EndpointAttainment best;
    best.target = target;
    // Rationals inside the rotation set, nearest to the target first.
    struct Candidate {
      long p, q;
      double gap;
    };
    std::vector<Candidate> cands;
    for (long q = 1; q <= settings.max_denominator; ++q) {
      long p_lo = static_cast<long>(std::ceil((iv.lo - iv.half_width) * q));
      long p_hi = static_cast<long>(std::floor((iv.hi + iv.half_width) * q));
      for (long p = p_lo; p <= p_hi; ++p) {
        if (std::gcd(p, q) != 1) continue;
        double gap = std::fabs(static_cast<double>(p) / q - target);
        if (gap <= settings.attain_tol) cands.push_back({p, q, gap});
      }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) {
                return a.gap < b.gap || (a.gap == b.gap && a.q < b.q);
              });
    for (const Candidate& c : cands) {
      if (auto found = find_rotation_orbit(map, c.p, c.q)) {
        found->target = target;
        found->attained = true;
        return *found;
      }
    }
    return best;
  };
  report.lo_end = attain(iv.lo);
  report.hi_end = attain(iv.hi);
  return report;
}

}  // namespace inlim
