#include "inlim/families.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "inlim/geometry.h"

namespace inlim {
namespace {

constexpr double kDomainSlack = 1e-12;

double tent_value(double s, double x) { return std::min(s * x, s * (1.0 - x)); }

double quadratic_value(double a, double x) { return a - x * x; }

double standard_lift(double b, double omega, double x) {
  double frac = x - std::floor(x);
  return x + omega + b / kTwoPi * std::sin(kTwoPi * frac);
}

// Local maximum / minimum of the standard lift inside [0,1), b > 1.
double standard_local_max(double b) { return std::acos(-1.0 / b) / kTwoPi; }
double standard_local_min(double b) { return 1.0 - standard_local_max(b); }

template <class F>
double bisect(F&& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, std::fabs(lo));
       ++i) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if ((gm <= 0.0) == (glo <= 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void sort_unique(std::vector<double>& v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  v.swap(out);
}

}  // namespace

Family Family::tent(double s) {
  if (!(s >= 0.0 && s <= 2.0)) {
    throw std::invalid_argument("tent slope s must lie in [0,2]");
  }
  return Family(FamilyKind::kTent, s, 0.0);
}

Family Family::quadratic(double a) {
  if (!(a >= -0.5 && a <= 2.0)) {
    throw std::invalid_argument("quadratic parameter a must lie in [-1/2,2]");
  }
  return Family(FamilyKind::kQuadratic, a, 0.0);
}

Family Family::standard(double b, double omega, double b_cap) {
  if (!(b >= 0.0 && b <= b_cap)) {
    throw std::invalid_argument("standard parameter b must lie in [0,b*]");
  }
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::invalid_argument("standard parameter omega must lie in [0,1]");
  }
  return Family(FamilyKind::kStandard, b, omega);
}

std::string Family::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case FamilyKind::kTent:
      os << "tent(s=" << p0_ << ")";
      break;
    case FamilyKind::kQuadratic:
      os << "quadratic(a=" << p0_ << ")";
      break;
    case FamilyKind::kStandard:
      os << "standard(b=" << p0_ << ", omega=" << p1_ << ")";
      break;
  }
  return os.str();
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kTent:
      return "tent";
    case FamilyKind::kQuadratic:
      return "quadratic";
    case FamilyKind::kStandard:
      return "standard";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view name) {
  if (name == "tent") return FamilyKind::kTent;
  if (name == "quadratic") return FamilyKind::kQuadratic;
  if (name == "standard") return FamilyKind::kStandard;
  throw std::invalid_argument("unknown family kind '" + std::string(name) +
                              "'");
}

SymbolWord::SymbolWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'L' && c != 'C' && c != 'R') {
      throw std::invalid_argument("symbol words use only L, C, R");
    }
  }
}

void SymbolWord::push_back(char c) {
  if (c != 'L' && c != 'C' && c != 'R') {
    throw std::invalid_argument("symbol words use only L, C, R");
  }
  letters_.push_back(c);
}

double quadratic_box_radius(double a) {
  double disc = 1.0 + 4.0 * a;
  return 0.5 * (1.0 + std::sqrt(std::max(disc, 0.0)));
}

IntervalBox phase_interval(const Family& p) {
  if (p.kind() == FamilyKind::kQuadratic) {
    double beta = quadratic_box_radius(p.primary());
    return {-beta, beta};
  }
  return {0.0, 1.0};
}

double critical_point(const Family& p) {
  switch (p.kind()) {
    case FamilyKind::kTent:
      return 0.5;
    case FamilyKind::kQuadratic:
      return 0.0;
    case FamilyKind::kStandard:
      break;
  }
  throw std::invalid_argument("the standard family has no single turning point");
}

double lipschitz_constant(const Family& p) {
  switch (p.kind()) {
    case FamilyKind::kTent:
      return p.primary();
    case FamilyKind::kQuadratic:
      return 2.0 * quadratic_box_radius(p.primary());
    case FamilyKind::kStandard:
      return 1.0 + p.primary();
  }
  return 0.0;
}

double phase_distance(const Family& p, double x, double y) {
  return p.is_circle() ? circle_distance(x, y) : std::fabs(x - y);
}

double eval(const Family& p, double x) {
  switch (p.kind()) {
    case FamilyKind::kTent:
      if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack)) {
        throw std::domain_error("tent map evaluated outside [0,1]");
      }
      return tent_value(p.primary(), std::clamp(x, 0.0, 1.0));
    case FamilyKind::kQuadratic: {
      double beta = quadratic_box_radius(p.primary());
      if (!(std::fabs(x) <= beta + kDomainSlack)) {
        throw std::domain_error("quadratic map evaluated outside its box");
      }
      return quadratic_value(p.primary(), x);
    }
    case FamilyKind::kStandard:
      if (!std::isfinite(x)) throw std::domain_error("non-finite angle");
      return wrap_unit(standard_lift(p.primary(), p.omega(), wrap_unit(x)));
  }
  return 0.0;
}

double lift_eval(const Family& p, double x) {
  if (!p.is_circle()) {
    throw std::invalid_argument("lift_eval needs the standard family");
  }
  return standard_lift(p.primary(), p.omega(), x);
}

IntervalBox image_interval(const Family& p, IntervalBox box) {
  switch (p.kind()) {
    case FamilyKind::kTent: {
      double s = p.primary();
      double lo = std::clamp(box.lo, 0.0, 1.0);
      double hi = std::clamp(box.hi, 0.0, 1.0);
      double a = tent_value(s, lo);
      double b = tent_value(s, hi);
      IntervalBox out{std::min(a, b), std::max(a, b)};
      if (lo < 0.5 && hi > 0.5) out.hi = 0.5 * s;
      return out;
    }
    case FamilyKind::kQuadratic: {
      double a = p.primary();
      double beta = quadratic_box_radius(a);
      double u = quadratic_value(a, box.lo);
      double v = quadratic_value(a, box.hi);
      IntervalBox out{std::min(u, v), std::max(u, v)};
      if (box.lo <= 0.0 && box.hi >= 0.0) out.hi = a;
      if (out.lo < -beta - kDomainSlack || out.hi > beta + kDomainSlack) {
        out.clipped = true;
      }
      out.lo = std::clamp(out.lo, -beta, beta);
      out.hi = std::clamp(out.hi, -beta, beta);
      return out;
    }
    case FamilyKind::kStandard: {
      if (box.hi - box.lo >= 1.0) return {0.0, 1.0};
      double b = p.primary();
      double w = p.omega();
      double vmin = std::min(standard_lift(b, w, box.lo),
                             standard_lift(b, w, box.hi));
      double vmax = std::max(standard_lift(b, w, box.lo),
                             standard_lift(b, w, box.hi));
      if (b > 1.0) {
        for (double c : {standard_local_max(b), standard_local_min(b)}) {
          for (double k = std::ceil(box.lo - c); c + k <= box.hi; k += 1.0) {
            double v = standard_lift(b, w, c + k);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
          }
        }
      }
      if (vmax - vmin >= 1.0) return {0.0, 1.0};
      double lo = wrap_unit(vmin);
      return {lo, lo + (vmax - vmin)};
    }
  }
  return box;
}

std::optional<int> stabilization_index(const Family& p, int m_max,
                                       double tol) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  IntervalBox x = phase_interval(p);
  for (int m = 0; m <= m_max; ++m) {
    IntervalBox y = image_interval(p, x);
    double d = std::max(std::fabs(x.lo - y.lo), std::fabs(x.hi - y.hi));
    if (d <= tol * x.width()) return m;
    x = y;
  }
  return std::nullopt;
}

IntervalBox stabilized_interval(const Family& p) {
  IntervalBox x = phase_interval(p);
  auto m = stabilization_index(p);
  if (!m) return x;
  for (int i = 0; i < *m; ++i) x = image_interval(p, x);
  return x;
}

std::vector<double> preimages(const Family& p, double y, IntervalBox box) {
  std::vector<double> out;
  auto keep = [&](double x) {
    if (x >= box.lo - kDomainSlack && x <= box.hi + kDomainSlack) {
      out.push_back(std::clamp(x, box.lo, box.hi));
    }
  };
  switch (p.kind()) {
    case FamilyKind::kTent: {
      double s = p.primary();
      if (s == 0.0) {
        if (y == 0.0) {
          keep(box.lo);
          keep(box.hi);
        }
        break;
      }
      if (y < -kDomainSlack || y > 0.5 * s + kDomainSlack) break;
      keep(y / s);
      keep(1.0 - y / s);
      break;
    }
    case FamilyKind::kQuadratic: {
      double d = p.primary() - y;
      if (d < -kDomainSlack) break;
      double r = std::sqrt(std::max(d, 0.0));
      keep(-r);
      keep(r);
      break;
    }
    case FamilyKind::kStandard: {
      double b = p.primary();
      double w = p.omega();
      std::vector<double> cuts{0.0, 1.0};
      if (b > 1.0) {
        cuts = {0.0, standard_local_max(b), standard_local_min(b), 1.0};
      }
      double target = wrap_unit(y);
      std::vector<double> found;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double c = cuts[i];
        double d = cuts[i + 1];
        double vc = standard_lift(b, w, c);
        double vd = standard_lift(b, w, d);
        double vlo = std::min(vc, vd);
        double vhi = std::max(vc, vd);
        for (double k = std::ceil(vlo - target); target + k <= vhi; k += 1.0) {
          double level = target + k;
          found.push_back(wrap_unit(bisect(
              [&](double x) { return standard_lift(b, w, x) - level; }, c, d)));
        }
      }
      bool full = box.hi - box.lo >= 1.0;
      for (double x : found) {
        if (full) {
          out.push_back(x);
        } else {
          double lifted = box.lo + wrap_unit(x - box.lo);
          if (lifted <= box.hi + kDomainSlack) out.push_back(x);
        }
      }
      break;
    }
  }
  sort_unique(out, kDomainSlack);
  return out;
}

namespace {

struct TentLap {
  double lo;
  double hi;
  double slope;   // T^k(x) = slope * x + offset on [lo, hi]
  double offset;
};

void walk_tent_laps(double s, int remaining, const TentLap& lap,
                    std::string& word, std::vector<PeriodicPoint>& out) {
  if (remaining == 0) {
    double x = lap.offset / (1.0 - lap.slope);
    double slack = 1e-12 * std::max(1.0, std::fabs(x));
    if (x >= lap.lo - slack && x <= lap.hi + slack) {
      out.push_back({std::clamp(x, lap.lo, lap.hi) + 0.0, SymbolWord(word)});
    }
    return;
  }
  double ylo = lap.slope * lap.lo + lap.offset;
  double yhi = lap.slope * lap.hi + lap.offset;
  auto descend = [&](double lo, double hi) {
    double ymid = lap.slope * 0.5 * (lo + hi) + lap.offset;
    bool left = ymid <= 0.5;
    TentLap next{lo, hi, left ? s * lap.slope : -s * lap.slope,
                 left ? s * lap.offset : s - s * lap.offset};
    word.push_back(left ? 'L' : 'R');
    walk_tent_laps(s, remaining - 1, next, word, out);
    word.pop_back();
  };
  if ((ylo - 0.5) * (yhi - 0.5) < 0.0) {
    double xm = (0.5 - lap.offset) / lap.slope;
    descend(lap.lo, xm);
    descend(xm, lap.hi);
  } else {
    descend(lap.lo, lap.hi);
  }
}

}  // namespace

std::vector<PeriodicPoint> tent_periodic_points(double s, int n) {
  if (!(s > 1.0 && s <= 2.0)) {
    throw std::invalid_argument("tent_periodic_points needs s in (1,2]");
  }
  if (n < 1 || n > kMaxTentPeriod) {
    throw std::invalid_argument("tent period must lie in [1," +
                                std::to_string(kMaxTentPeriod) + "]");
  }
  std::vector<PeriodicPoint> raw;
  std::string word;
  walk_tent_laps(s, n, TentLap{0.0, 1.0, 1.0, 0.0}, word, raw);

  // Fixed points on a shared lap boundary are reported by both laps; the
  // words differ exactly where the orbit hits the turning point.
  std::vector<PeriodicPoint> out;
  for (auto& p : raw) {
    if (!out.empty() && p.x - out.back().x <= 1e-10) {
      std::string merged = out.back().word.str();
      for (std::size_t i = 0; i < merged.size(); ++i) {
        if (merged[i] != p.word[i]) merged[i] = 'C';
      }
      out.back().word = SymbolWord(merged);
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

double entropy_estimate(double s, int n) {
  if (n < 4) throw std::invalid_argument("entropy_estimate needs n >= 4");
  auto pts = tent_periodic_points(s, n);
  return std::log(static_cast<double>(pts.size())) / n;
}

std::vector<double> quadratic_periodic_points(double a, int n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("quadratic period must lie in [1,16]");
  }
  double beta = quadratic_box_radius(a);
  auto iterate = [a](double x, int k) {
    for (int i = 0; i < k; ++i) x = quadratic_value(a, x);
    return x;
  };
  // Laps of f^(k+1): split each monotone lap of f^k where f^k crosses 0.
  std::vector<std::pair<double, double>> laps{{-beta, 0.0}, {0.0, beta}};
  for (int k = 1; k < n; ++k) {
    std::vector<std::pair<double, double>> next;
    for (auto [lo, hi] : laps) {
      double glo = iterate(lo, k);
      double ghi = iterate(hi, k);
      if ((glo < 0.0 && ghi > 0.0) || (glo > 0.0 && ghi < 0.0)) {
        double c = bisect([&](double x) { return iterate(x, k); }, lo, hi);
        next.emplace_back(lo, c);
        next.emplace_back(c, hi);
      } else {
        next.emplace_back(lo, hi);
      }
    }
    laps.swap(next);
  }
  std::vector<double> out;
  auto g = [&](double x) { return iterate(x, n) - x; };
  for (auto [lo, hi] : laps) {
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) out.push_back(lo);
    if (ghi == 0.0) out.push_back(hi);
    if ((glo < 0.0 && ghi > 0.0) || (glo > 0.0 && ghi < 0.0)) {
      out.push_back(bisect(g, lo, hi));
    }
  }
  sort_unique(out, 1e-10);
  return out;
}

SymbolWord itinerary(const Family& p, double x, int n, double snap_tol) {
  if (p.is_circle()) {
    throw std::invalid_argument("itineraries need an interval family");
  }
  double c = critical_point(p);
  SymbolWord word;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(x - c) < snap_tol) {
      word.push_back('C');
    } else {
      word.push_back(x < c ? 'L' : 'R');
    }
    x = p.kind() == FamilyKind::kTent ? tent_value(p.primary(), x)
                                      : quadratic_value(p.primary(), x);
  }
  return word;
}

}  // namespace inlim
