#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "inlim/suspension.h"

namespace inlim {
namespace {

constexpr double kCarrierSlack = 1e-12;

void check_fattening(double delta, double eps) {
  if (!(delta > 0.0 && delta < 0.25)) {
    throw std::invalid_argument("delta=" + std::to_string(delta) +
                                " outside (0, 1/4)");
  }
  if (!(eps > 0.0 && eps < 0.25)) {
    throw std::invalid_argument("eps=" + std::to_string(eps) +
                                " outside (0, 1/4)");
  }
}

void check_model(ManifoldModel model, const Family& family) {
  if (model.is_annulus() != family.is_circle()) {
    throw std::invalid_argument(
        model.is_annulus()
            ? "the annulus model needs the standard family"
            : "the disk model needs an interval family (tent or quadratic)");
  }
}

}  // namespace

FattenedMap::FattenedMap(Unchecked, ManifoldModel model, Family family,
                         double delta, double eps, double theta0)
    : model_(model),
      family_(family),
      delta_(delta),
      eps_(eps),
      theta0_(theta0) {
  check_model(model_, family_);
  if (!model_.is_annulus()) {
    IntervalBox box = phase_interval(family_);
    phase_lo_ = box.lo;
    phase_width_ = box.width();
    margin_ = delta_ * (1.0 + 2.0 * eps_);
  }
}

FattenedMap::FattenedMap(ManifoldModel model, Family family, double delta,
                         double eps, double theta0)
    : FattenedMap(Unchecked{}, model, family, delta, eps, theta0) {
  check_fattening(delta, eps);
}

FattenedMap FattenedMap::spine_limit(ManifoldModel model, Family family,
                                     double theta0) {
  return FattenedMap(Unchecked{}, model, family, 0.0, 0.0, theta0);
}

double FattenedMap::to_spine(double phase) const {
  if (model_.is_annulus()) return wrap_unit(phase);
  return margin_ + (1.0 - 2.0 * margin_) * (phase - phase_lo_) / phase_width_;
}

double FattenedMap::to_phase(double u) const {
  if (model_.is_annulus()) return wrap_unit(u);
  return phase_lo_ + phase_width_ * (u - margin_) / (1.0 - 2.0 * margin_);
}

double FattenedMap::spine_map(double u) const {
  if (model_.is_annulus()) return eval(family_, u);
  const double lo = phase_lo_;
  const double hi = phase_lo_ + phase_width_;
  double x = std::clamp(to_phase(std::clamp(u, margin_, 1.0 - margin_)), lo, hi);
  // The quadratic box is not invariant for a < -1/4; clip like image_interval.
  double y = std::clamp(eval(family_, x), lo, hi);
  return to_spine(y);
}

AmbientPoint FattenedMap::operator()(const AmbientPoint& p) const {
  if (!(p.y >= -1.0 - kCarrierSlack && p.y <= 1.0 + kCarrierSlack) ||
      !std::isfinite(p.x) ||
      (!model_.is_annulus() &&
       !(p.x >= -kCarrierSlack && p.x <= 1.0 + kCarrierSlack))) {
    throw std::domain_error("fattened map applied outside the carrier");
  }
  const double v = std::clamp(p.y, -1.0, 1.0);
  if (model_.is_annulus()) {
    double theta = wrap_unit(lift_eval(family_, p.x) + delta_ * v);
    return {theta, eps_ * std::cos(kTwoPi * (p.x - theta0_))};
  }
  const double u = std::clamp(p.x, 0.0, 1.0);
  const double recorder = eps_ * (2.0 * u - 1.0);
  double x = spine_map(u) + delta_ * (v - recorder);
  return {std::clamp(x, 0.0, 1.0), recorder};
}

AmbientPoint FattenedMap::apply_lift(const AmbientPoint& p) const {
  if (!model_.is_annulus()) {
    throw std::invalid_argument("apply_lift needs the annulus model");
  }
  if (!(std::fabs(p.y) <= 1.0 + kCarrierSlack) || !std::isfinite(p.x)) {
    throw std::domain_error("fattened map applied outside the carrier");
  }
  const double v = std::clamp(p.y, -1.0, 1.0);
  return {lift_eval(family_, p.x) + delta_ * v,
          eps_ * std::cos(kTwoPi * (p.x - theta0_))};
}

PlanarMap FattenedMap::as_function() const {
  return [self = *this](const AmbientPoint& p) { return self(p); };
}

AmbientPoint fattened_apply(const FattenedMap& map, const AmbientPoint& p) {
  return map(p);
}

double semiconjugacy_residual(const FattenedMap& map,
                              std::span<const AmbientPoint> cloud) {
  double worst = 0.0;
  for (const AmbientPoint& z : cloud) {
    AmbientPoint hz = map(z);
    double d = 0.0;
    if (map.model().is_annulus()) {
      d = circle_distance(map.spine_map(wrap_unit(z.x)), hz.x);
    } else {
      d = std::fabs(map.spine_map(z.x) - hz.x);
    }
    worst = std::max(worst, d);
  }
  return worst;
}

AmbientPoint henon_to_disk(const FattenedMap& map, const AmbientPoint& h) {
  return {map.to_spine(h.x), map.eps() * (2.0 * map.to_spine(h.y) - 1.0)};
}

}  // namespace inlim
