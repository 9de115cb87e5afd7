#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>
#include <stdexcept>
#include <string>

#include "inlim/suspension.h"

namespace inlim {
namespace {

constexpr int kMaxMatchPeriod = 8;
constexpr int kNewtonIterations = 60;
constexpr double kJacobianStep = 1e-8;

AmbientPoint clamp_disk(AmbientPoint p) {
  return {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, -1.0, 1.0)};
}

AmbientPoint iterate(const FattenedMap& map, AmbientPoint p, int n) {
  for (int i = 0; i < n; ++i) p = map(p);
  return p;
}

AmbientPoint defect(const FattenedMap& map, AmbientPoint p, int n) {
  AmbientPoint q = iterate(map, p, n);
  return {q.x - p.x, q.y - p.y};
}

double norm(AmbientPoint p) { return std::hypot(p.x, p.y); }

// Damped Newton on H^n(z) - z with a one-sided difference Jacobian whose
// probe stays inside the carrier.
AmbientPoint newton_fixed_point(const FattenedMap& map, AmbientPoint z, int n,
                                double tol, double& residual) {
  AmbientPoint g = defect(map, z, n);
  residual = norm(g);
  for (int it = 0; it < kNewtonIterations && residual > tol * 1e-3; ++it) {
    std::array<AmbientPoint, 2> cols{};
    for (int c = 0; c < 2; ++c) {
      AmbientPoint zp = z;
      double& coord = c == 0 ? zp.x : zp.y;
      double h = coord + kJacobianStep <= 1.0 ? kJacobianStep : -kJacobianStep;
      coord += h;
      AmbientPoint gp = defect(map, zp, n);
      cols[c] = {(gp.x - g.x) / h, (gp.y - g.y) / h};
    }
    double det = cols[0].x * cols[1].y - cols[1].x * cols[0].y;
    if (!(std::fabs(det) > 1e-300)) break;
    AmbientPoint step{(-g.x * cols[1].y + g.y * cols[1].x) / det,
                      (-cols[0].x * g.y + cols[0].y * g.x) / det};
    double lambda = 1.0;
    bool improved = false;
    for (int half = 0; half < 30; ++half, lambda *= 0.5) {
      AmbientPoint trial = clamp_disk({z.x + lambda * step.x,
                                       z.y + lambda * step.y});
      AmbientPoint gt = defect(map, trial, n);
      if (norm(gt) < residual) {
        z = trial;
        g = gt;
        residual = norm(gt);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return z;
}

// Fixed point of H^n that follows the itinerary of a tent periodic orbit.
// Along a fixed itinerary g is affine on every point, and the orbit
// u_{k+1} = g(u_k) + 2 delta eps (u_{k-1} - u_k) is a cyclic linear system.
std::optional<AmbientPoint> itinerary_fixed_point(const FattenedMap& map,
                                                  const SymbolWord& word) {
  const int n = static_cast<int>(word.size());
  const double s = map.family().primary();
  const double m = map.spine_margin();
  const double c = 2.0 * map.delta() * map.eps();
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(n), 0.0);
  auto at = [&](int row, int col) -> double& {
    return a[static_cast<std::size_t>(row * n + ((col % n) + n) % n)];
  };
  for (int k = 0; k < n; ++k) {
    // g(u) = slope u + offset on the branch of letter k.
    const bool right = word[static_cast<std::size_t>(k)] == 'R';
    const double slope = right ? -s : s;
    const double offset = right ? m + s * (1.0 - m) : m - s * m;
    at(k, k + 1) += 1.0;
    at(k, k) -= slope - c;
    at(k, k - 1) -= c;
    rhs[static_cast<std::size_t>(k)] = offset;
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(at(r, col)) > std::fabs(at(piv, col))) piv = r;
    }
    if (!(std::fabs(at(piv, col)) > 1e-14)) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(col, j), at(piv, j));
      std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(piv)]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = at(r, col) / at(col, col);
      for (int j = col; j < n; ++j) at(r, j) -= f * at(col, j);
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  std::vector<double> u(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double acc = rhs[static_cast<std::size_t>(r)];
    for (int j = r + 1; j < n; ++j) acc -= at(r, j) * u[static_cast<std::size_t>(j)];
    u[static_cast<std::size_t>(r)] = acc / at(r, r);
  }
  AmbientPoint z{u[0], map.eps() * (2.0 * u[static_cast<std::size_t>(n - 1)] - 1.0)};
  if (!in_carrier(map.model(), z)) return std::nullopt;
  return z;
}

}  // namespace

bool PeriodicReport::all_matched() const {
  return std::all_of(periods.begin(), periods.end(),
                     [](const PeriodMatch& m) { return m.ok(); });
}

PeriodicReport periodic_match(const FattenedMap& map, int max_period,
                              double tol) {
  const Family& fam = map.family();
  if (map.model().is_annulus() || fam.kind() != FamilyKind::kTent) {
    throw std::invalid_argument("periodic_match needs a disk tent map");
  }
  const double s = fam.primary();
  if (!(s > 1.0 && s <= 2.0)) {
    throw std::invalid_argument("periodic_match needs s in (1,2]");
  }
  if (max_period < 1 || max_period > kMaxMatchPeriod) {
    throw std::invalid_argument("max_period must lie in [1, " +
                                std::to_string(kMaxMatchPeriod) + "]");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  PeriodicReport report;
  for (int n = 1; n <= max_period; ++n) {
    PeriodMatch pm;
    pm.period = n;
    std::vector<PeriodicPoint> exact = tent_periodic_points(s, n);
    pm.expected = exact.size();
    for (const PeriodicPoint& pp : exact) {
      // Predecessor on the orbit: T^(n-1)(x).
      double prev = pp.x;
      for (int i = 0; i + 1 < n; ++i) prev = eval(fam, prev);
      AmbientPoint seed{map.to_spine(pp.x),
                        map.eps() * (2.0 * map.to_spine(prev) - 1.0)};
      PeriodicOrbitMatch m;
      m.phase_seed = pp.x;
      m.residual = std::numeric_limits<double>::infinity();
      if (auto exact_z = itinerary_fixed_point(map, pp.word)) {
        m.point = newton_fixed_point(map, *exact_z, n, tol, m.residual);
      }
      if (!(m.residual < tol)) {
        m.point = newton_fixed_point(map, seed, n, tol, m.residual);
      }
      m.converged = m.residual < tol;
      if (m.converged) {
        pm.max_residual = std::max(pm.max_residual, m.residual);
      } else {
        ++pm.failures;
      }
      pm.points.push_back(m);
    }
    // Distinct converged solutions.
    std::vector<AmbientPoint> found;
    for (const auto& m : pm.points) {
      if (m.converged) found.push_back(m.point);
    }
    std::sort(found.begin(), found.end(),
              [](const AmbientPoint& a, const AmbientPoint& b) {
                return a.x < b.x || (a.x == b.x && a.y < b.y);
              });
    pm.min_separation = std::numeric_limits<double>::infinity();
    const double same = 10.0 * tol;
    for (std::size_t i = 0; i < found.size(); ++i) {
      bool duplicate = false;
      for (std::size_t j = 0; j < i; ++j) {
        double d = std::hypot(found[i].x - found[j].x, found[i].y - found[j].y);
        pm.min_separation = std::min(pm.min_separation, d);
        if (d <= same) duplicate = true;
      }
      if (!duplicate) ++pm.matched;
    }
    report.periods.push_back(std::move(pm));
  }
  return report;
}

}  // namespace inlim
