#include "inlim/hausdorff.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace inlim {
namespace {

constexpr double kMinCell = 1e-4;

double axis_gap(double p, double lo, double hi) {
  if (p < lo) return lo - p;
  if (p > hi) return p - hi;
  return 0.0;
}

double circle_gap(double p, double lo, double hi) {
  if (p >= lo && p <= hi) return 0.0;
  return std::min(circle_distance(p, lo), circle_distance(p, hi));
}

}  // namespace

double plane_distance(PlaneMetric metric, const AmbientPoint& a,
                      const AmbientPoint& b) {
  double dx = metric == PlaneMetric::kCylinder ? circle_distance(a.x, b.x)
                                               : a.x - b.x;
  return std::hypot(dx, a.y - b.y);
}

NearestGrid::NearestGrid(std::span<const AmbientPoint> points,
                         PlaneMetric metric, double cell)
    : metric_(metric) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const bool cyl = metric == PlaneMetric::kCylinder;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& p : points) {
    double x = cyl ? wrap_unit(p.x) : p.x;
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  if (cyl) {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  const double w = x_hi - x_lo;
  const double h = y_hi - y_lo;
  const double n = static_cast<double>(points.size());
  double c = cell;
  if (!(c > 0.0)) {
    double area = w * h;
    c = area > 0.0 ? std::sqrt(area / n) : std::max(w, h) / n;
  }
  c = std::max(c, kMinCell);
  const double max_cells = 4.0 * n + 1024.0;
  for (;;) {
    nx_ = cyl ? std::max(1L, static_cast<long>(std::floor(1.0 / c)))
              : std::max(1L, static_cast<long>(std::ceil(w / c)));
    ny_ = std::max(1L, static_cast<long>(std::ceil(h / c)));
    if (static_cast<double>(nx_) * static_cast<double>(ny_) <= max_cells) break;
    c *= 2.0;
  }
  x0_ = x_lo;
  y0_ = y_lo;
  hx_ = cyl ? 1.0 / static_cast<double>(nx_) : c;
  hy_ = c;

  auto index_of = [&](const AmbientPoint& p) {
    double x = cyl ? wrap_unit(p.x) : p.x;
    long ix = std::clamp(static_cast<long>(std::floor((x - x0_) / hx_)), 0L,
                         nx_ - 1);
    long iy = std::clamp(static_cast<long>(std::floor((p.y - y0_) / hy_)), 0L,
                         ny_ - 1);
    return static_cast<std::size_t>(iy * nx_ + ix);
  };
  const std::size_t cells = static_cast<std::size_t>(nx_ * ny_);
  start_.assign(cells + 1, 0);
  for (const auto& p : points) ++start_[index_of(p) + 1];
  for (std::size_t i = 0; i < cells; ++i) start_[i + 1] += start_[i];
  points_.resize(points.size());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (const auto& p : points) {
    AmbientPoint q = p;
    if (cyl) q.x = wrap_unit(q.x);
    points_[fill[index_of(p)]++] = q;
  }
}

double NearestGrid::cell_distance(const AmbientPoint& p, long ix,
                                  long iy) const {
  double lo = x0_ + static_cast<double>(ix) * hx_;
  double dx = metric_ == PlaneMetric::kCylinder
                  ? circle_gap(p.x, lo, lo + hx_)
                  : axis_gap(p.x, lo, lo + hx_);
  double ylo = y0_ + static_cast<double>(iy) * hy_;
  double dy = axis_gap(p.y, ylo, ylo + hy_);
  return std::hypot(dx, dy);
}

double NearestGrid::nearest_distance(const AmbientPoint& query) const {
  const bool cyl = metric_ == PlaneMetric::kCylinder;
  AmbientPoint p = query;
  if (cyl) p.x = wrap_unit(p.x);
  const long cx = std::clamp(static_cast<long>(std::floor((p.x - x0_) / hx_)),
                             0L, nx_ - 1);
  const long cy = std::clamp(static_cast<long>(std::floor((p.y - y0_) / hy_)),
                             0L, ny_ - 1);
  // Column offsets that name distinct columns.
  const long di_min = cyl ? -((nx_ - 1) / 2) : -cx;
  const long di_max = cyl ? nx_ / 2 : nx_ - 1 - cx;
  const long dj_min = -cy;
  const long dj_max = ny_ - 1 - cy;
  const long k_max = std::max({-di_min, di_max, -dj_min, dj_max});

  double best = std::numeric_limits<double>::infinity();
  auto visit = [&](long di, long dj, double& ring_lb) {
    long ix = cx + di;
    if (cyl) ix = ((ix % nx_) + nx_) % nx_;
    const long iy = cy + dj;
    double cd = cell_distance(p, ix, iy);
    ring_lb = std::min(ring_lb, cd);
    if (cd >= best) return;
    const std::size_t c = static_cast<std::size_t>(iy * nx_ + ix);
    for (std::size_t i = start_[c]; i < start_[c + 1]; ++i) {
      best = std::min(best, plane_distance(metric_, p, points_[i]));
    }
  };
  for (long k = 0; k <= k_max; ++k) {
    double ring_lb = std::numeric_limits<double>::infinity();
    const long a = std::max(di_min, -k);
    const long b = std::min(di_max, k);
    for (long dj = std::max(dj_min, -k); dj <= std::min(dj_max, k); ++dj) {
      if (dj == -k || dj == k) {
        for (long di = a; di <= b; ++di) visit(di, dj, ring_lb);
      } else {
        if (-k >= di_min) visit(-k, dj, ring_lb);
        if (k != 0 && k <= di_max) visit(k, dj, ring_lb);
      }
    }
    if (ring_lb >= best) break;
  }
  return best;
}

double directed_hausdorff(std::span<const AmbientPoint> a,
                          std::span<const AmbientPoint> b, PlaneMetric metric,
                          double expected_distance) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("Hausdorff distance of an empty set");
  }
  double cell = expected_distance > 0.0
                    ? std::max(expected_distance / 4.0, kMinCell)
                    : 0.0;
  NearestGrid grid(b, metric, cell);
  double worst = 0.0;
  for (const auto& p : a) worst = std::max(worst, grid.nearest_distance(p));
  return worst;
}

double hausdorff(std::span<const AmbientPoint> a,
                 std::span<const AmbientPoint> b, PlaneMetric metric,
                 double expected_distance) {
  return std::max(directed_hausdorff(a, b, metric, expected_distance),
                  directed_hausdorff(b, a, metric, expected_distance));
}

}  // namespace inlim
