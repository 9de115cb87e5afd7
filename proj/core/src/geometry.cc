#include "inlim/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace inlim {

double wrap_unit(double x) {
  double w = x - std::floor(x);
  // floor can leave exactly 1.0 for tiny negative x.
  return w >= 1.0 ? 0.0 : w;
}

double circle_distance(double a, double b) {
  double d = std::fabs(wrap_unit(a) - wrap_unit(b));
  return d > 0.5 ? 1.0 - d : d;
}

bool in_carrier(ManifoldModel m, AmbientPoint p) {
  if (!(p.y >= -1.0 && p.y <= 1.0)) return false;
  if (m.is_annulus()) return std::isfinite(p.x);
  return p.x >= 0.0 && p.x <= 1.0;
}

double carrier_distance(ManifoldModel m, AmbientPoint a, AmbientPoint b) {
  double dx = m.is_annulus() ? circle_distance(a.x, b.x) : a.x - b.x;
  return std::hypot(dx, a.y - b.y);
}

AmbientPoint collar_to_ambient(ManifoldModel m, CollarCoord c) {
  if (!(c.s >= 0.0 && c.s <= 1.0)) {
    throw std::domain_error("collar coordinate s=" + std::to_string(c.s) +
                            " outside [0,1]");
  }
  double x = c.eta;
  if (m.is_annulus()) {
    x = wrap_unit(x);
  } else if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("disk boundary coordinate outside [0,1]");
  }
  double y = 1.0 - c.s;
  return {x, c.side == Side::kPlus ? y : -y};
}

CollarCoord ambient_to_collar(ManifoldModel m, AmbientPoint p) {
  if (!in_carrier(m, p)) throw std::out_of_range("point outside carrier");
  double x = m.is_annulus() ? wrap_unit(p.x) : p.x;
  if (p.y > 0.0) return {x, Side::kPlus, 1.0 - p.y};
  if (p.y < 0.0) return {x, Side::kMinus, 1.0 + p.y};
  return {x, Side::kPlus, 1.0};
}

AmbientPoint retraction(ManifoldModel m, AmbientPoint p) {
  if (!in_carrier(m, p)) throw std::out_of_range("point outside carrier");
  return {m.is_annulus() ? wrap_unit(p.x) : p.x, 0.0};
}

double phi(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("phi: s outside [0,1]");
  return std::min(2.0 * s, 1.0);
}

double phi_delta(double s, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::domain_error("phi_delta: delta outside (0,1]");
  }
  return (1.0 - delta) * phi(s) + delta * s;
}

AmbientPoint upsilon(ManifoldModel m, AmbientPoint p,
                     std::optional<double> delta) {
  CollarCoord c = ambient_to_collar(m, p);
  c.s = delta ? phi_delta(c.s, *delta) : phi(c.s);
  return collar_to_ambient(m, c);
}

}  // namespace inlim
