#ifndef INLIM_FAMILIES_H_
#define INLIM_FAMILIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inlim {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Largest b accepted for the standard family unless a cap is given.
inline constexpr double kDefaultStandardBCap = 8.0;
// Distance to the critical point below which an itinerary reports C.
inline constexpr double kCriticalSnapTol = 1e-9;
// Branch-count cap for exact tent enumeration (2^20 laps).
inline constexpr int kMaxTentPeriod = 20;

enum class FamilyKind { kTent, kQuadratic, kStandard };

// A point in the parameter space of one of the three families:
//   tent       T_s(x)  = min(s x, s(1-x)),           s in [0,2], x in [0,1]
//   quadratic  f_a(x)  = a - x^2,                    a in [-1/2,2]
//   standard   f(x)    = x + w + b/(2 pi) sin(2 pi x) mod 1, b in [0,b*],
//                                                    w in [0,1]
class Family {
 public:
  static Family tent(double s);
  static Family quadratic(double a);
  static Family standard(double b, double omega,
                         double b_cap = kDefaultStandardBCap);

  FamilyKind kind() const { return kind_; }
  bool is_circle() const { return kind_ == FamilyKind::kStandard; }

  // Tent slope s, quadratic a, or standard b.
  double primary() const { return p0_; }
  // Standard-family omega; zero otherwise.
  double omega() const { return p1_; }

  std::string describe() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(FamilyKind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}

  FamilyKind kind_;
  double p0_;
  double p1_;
};

std::string_view to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view name);

// Closed subinterval of the phase interval.  For the standard family it is a
// lifted arc with lo in [0,1) and hi <= lo + 1; [0,1] is the whole circle.
struct IntervalBox {
  double lo = 0.0;
  double hi = 0.0;
  // Set when the exact image left the phase interval and was clipped.
  bool clipped = false;

  double width() const { return hi - lo; }
  bool contains(const IntervalBox& other, double tol = 0.0) const {
    return other.lo >= lo - tol && other.hi <= hi + tol;
  }
};

// Itinerary symbols relative to the critical point.
class SymbolWord {
 public:
  SymbolWord() = default;
  // Throws std::invalid_argument on letters other than L, C, R.
  explicit SymbolWord(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  void push_back(char c);

  friend bool operator==(const SymbolWord&, const SymbolWord&) = default;

 private:
  std::string letters_;
};

// Positive fixed point of -f_a, the half-width of the forward-invariant box
// [-beta, beta].  For a < -1/4 every orbit escapes; 1/2 is returned.
double quadratic_box_radius(double a);

// Canonical phase interval: [0,1], [-beta,beta], or the circle [0,1].
IntervalBox phase_interval(const Family& p);
double critical_point(const Family& p);
// Global Lipschitz constant of f on its phase interval.
double lipschitz_constant(const Family& p);
// |x-y| for interval families, arc distance for the circle.
double phase_distance(const Family& p, double x, double y);

// f_p(x).  Standard-family values are reduced to [0,1).  Throws
// std::domain_error when x lies outside the phase interval of an interval
// family.
double eval(const Family& p, double x);

// Degree-one lift of the standard family; lift_eval(x+1) = lift_eval(x)+1.
// Throws std::invalid_argument for the interval families.
double lift_eval(const Family& p, double x);

// Exact forward image of a subinterval.
IntervalBox image_interval(const Family& p, IntervalBox box);

// Least m <= m_max with d_H(f^m(X), f^{m+1}(X)) <= tol * diam f^m(X), where X
// is the phase interval; nullopt if the images are still shrinking at m_max.
std::optional<int> stabilization_index(const Family& p, int m_max = 64,
                                       double tol = 1e-9);

// f^m(X) for the stabilization index m (or X itself when none is found).
IntervalBox stabilized_interval(const Family& p);

// All preimages of y inside box, sorted ascending (circle: representatives in
// [0,1)).
std::vector<double> preimages(const Family& p, double y, IntervalBox box);

struct PeriodicPoint {
  double x = 0.0;
  SymbolWord word;
};

// Every fixed point of T_s^n, ascending, found by solving the affine
// fixed-point equation on each lap of T_s^n.  Requires s in (1,2] and
// 1 <= n <= kMaxTentPeriod.
std::vector<PeriodicPoint> tent_periodic_points(double s, int n);

// (1/n) log #Fix(T_s^n).  Requires s in (1,2], n >= 4.
double entropy_estimate(double s, int n);

// Fixed points of f_a^n, found by bisection on each monotone lap.
std::vector<double> quadratic_periodic_points(double a, int n);

// L/C/R word of the first n orbit points; interval families only.
SymbolWord itinerary(const Family& p, double x, int n,
                     double snap_tol = kCriticalSnapTol);

}  // namespace inlim

#endif  // INLIM_FAMILIES_H_
