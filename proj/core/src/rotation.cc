#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "inlim/rotation.h"

namespace inlim {

GridLift::GridLift(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("grid lift needs at least two values");
  }
  n_ = values_.size() - 1;
  if (std::fabs(values_.back() - values_.front() - 1.0) > 1e-9) {
    throw std::invalid_argument("grid lift is not of degree one");
  }
}

Envelopes envelopes(const Family& p, int grid_res) {
  if (!p.is_circle()) {
    throw std::invalid_argument("envelopes need the standard family");
  }
  if (grid_res < 2) throw std::invalid_argument("grid_res must be >= 2");
  const std::size_t n = static_cast<std::size_t>(grid_res);
  const double h = 1.0 / static_cast<double>(n);

  // Upper hull: running max of F over [-1, x].
  std::vector<double> upper(n + 1);
  double run = -INFINITY;
  for (std::size_t j = 0; j <= n; ++j) {
    run = std::max(run, lift_eval(p, -1.0 + static_cast<double>(j) * h));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    run = std::max(run, lift_eval(p, static_cast<double>(i) * h));
    upper[i] = run;
  }
  upper[n] = upper[0] + 1.0;

  // Lower hull: running min of F over [x, 2], swept from the right.
  std::vector<double> lower(n + 1);
  run = INFINITY;
  for (std::size_t j = 2 * n; j > n; --j) {
    run = std::min(run, lift_eval(p, static_cast<double>(j) * h));
  }
  for (std::size_t i = n + 1; i-- > 0;) {
    run = std::min(run, lift_eval(p, static_cast<double>(i) * h));
    lower[i] = run;
  }
  lower[n] = lower[0] + 1.0;

  double modulus = (1.0 + p.primary()) * h;
  return {GridLift(std::move(lower)), GridLift(std::move(upper)), modulus};
}

RotationInterval rotation_interval(const Family& p, std::size_t n,
                                   int grid_res) {
  Envelopes env = envelopes(p, grid_res);
  RotationInterval out;
  out.lo = rotation_number_monotone(env.lower, 0.0, n);
  out.hi = rotation_number_monotone(env.upper, 0.0, n);
  out.half_width = 1.0 / static_cast<double>(n) + env.modulus;
  return out;
}

double collar_bump(double r, double width) {
  if (!(width > 0.0 && width < 1.0)) {
    throw std::invalid_argument("collar width must lie in (0,1)");
  }
  double t = (std::fabs(r) - (1.0 - width)) / width;
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

BoundaryPushMap::BoundaryPushMap(FattenedMap map, RotationInterval interval,
                                 double collar_width)
    : map_(std::move(map)), interval_(interval), width_(collar_width) {
  if (!map_.model().is_annulus()) {
    throw std::invalid_argument("boundary push needs the annulus model");
  }
  if (!(collar_width > 0.0 && collar_width < 1.0)) {
    throw std::invalid_argument("collar width must lie in (0,1)");
  }
}

AmbientPoint BoundaryPushMap::apply_lift(const AmbientPoint& p) const {
  AmbientPoint f = map_.apply_lift(p);
  double chi = collar_bump(p.y, width_);
  if (chi == 0.0) return f;
  double push = p.y < 0.0 ? interval_.lo : interval_.hi;
  return {(1.0 - chi) * f.x + chi * (p.x + push),
          (1.0 - chi) * f.y + chi * p.y};
}

AmbientPoint BoundaryPushMap::operator()(const AmbientPoint& p) const {
  AmbientPoint q = apply_lift(p);
  return {wrap_unit(q.x), q.y};
}

BoundaryPushMap boundary_push(const FattenedMap& map,
                              const RotationInterval& interval,
                              double collar_width) {
  return BoundaryPushMap(map, interval, collar_width);
}

}  // namespace inlim
