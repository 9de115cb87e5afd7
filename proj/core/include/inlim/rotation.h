#ifndef INLIM_ROTATION_H_
#define INLIM_ROTATION_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inlim/families.h"
#include "inlim/geometry.h"
#include "inlim/suspension.h"

namespace inlim {

inline constexpr int kDefaultEnvelopeGrid = 4096;

namespace detail {

// Throws std::invalid_argument unless the sampled lift is nondecreasing and
// satisfies F(x+1) = F(x) + 1.
template <class Lift>
void check_monotone_degree_one(const Lift& lift, double x0) {
  constexpr int kSamples = 256;
  double prev = lift(x0);
  for (int i = 1; i <= kSamples; ++i) {
    double x = x0 + static_cast<double>(i) / kSamples;
    double y = lift(x);
    if (y < prev - 1e-12) {
      throw std::invalid_argument("lift is not nondecreasing near x=" +
                                  std::to_string(x));
    }
    prev = y;
  }
  for (int i = 0; i < 16; ++i) {
    double x = x0 + static_cast<double>(i) / 16.0;
    if (std::fabs(lift(x + 1.0) - lift(x) - 1.0) > 1e-9) {
      throw std::invalid_argument("lift is not of degree one");
    }
  }
}

}  // namespace detail

// (F^n(x0) - x0) / n for a nondecreasing degree-one lift; within 1/n of the
// rotation number for every x0.  The orbit is tracked by its fractional part
// and an integer count so precision does not degrade with n.
template <class Lift>
double rotation_number_monotone(const Lift& lift, double x0, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rotation number needs n >= 1");
  detail::check_monotone_degree_one(lift, x0);
  double base = std::floor(x0);
  double x = x0 - base;
  const double start = x;
  double turns = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double y = lift(x);
    double k = std::floor(y);
    turns += k;
    x = y - k;
  }
  return (turns + (x - start)) / static_cast<double>(n);
}

// Degree-one lift stored by its values on a uniform grid over [0,1] and
// extended by linear interpolation and F(x+1) = F(x) + 1.
class GridLift {
 public:
  // values[i] = F(i / N) for i = 0..N with values[N] = values[0] + 1.
  explicit GridLift(std::vector<double> values);

  double operator()(double x) const {
    double k = std::floor(x);
    double t = (x - k) * static_cast<double>(n_);
    std::size_t i = static_cast<std::size_t>(t);
    if (i >= n_) i = n_ - 1;
    double w = t - static_cast<double>(i);
    return k + values_[i] + w * (values_[i + 1] - values_[i]);
  }

  std::size_t resolution() const { return n_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  std::size_t n_;
};

struct Envelopes {
  GridLift lower;
  GridLift upper;
  // Bound on the distance between the grid envelopes and the exact hulls.
  double modulus = 0.0;
};

// Monotone hulls of the standard-family lift:
//   upper(x) = sup_{y <= x} F(y),   lower(x) = inf_{y >= x} F(y),
// computed by cumulative max over [-1,1] and cumulative min over [0,2].
// Both are nondecreasing, of degree one, and lower <= F <= upper.
Envelopes envelopes(const Family& standard, int grid_res = kDefaultEnvelopeGrid);

struct RotationInterval {
  double lo = 0.0;
  double hi = 0.0;
  // Error bound per endpoint: 1/n plus the envelope modulus.
  double half_width = 0.0;

  double width() const { return hi - lo; }
  bool contains(double r, double tol) const {
    return r >= lo - tol && r <= hi + tol;
  }
};

// [rho(lower), rho(upper)].
RotationInterval rotation_interval(const Family& standard, std::size_t n,
                                   int grid_res = kDefaultEnvelopeGrid);

struct TongueWindow {
  double b_lo = 0.0;
  double b_hi = 1.0;
  double omega_lo = 0.0;
  double omega_hi = 1.0;
};

struct TongueCell {
  double b = 0.0;
  double omega = 0.0;
  RotationInterval interval;
  bool member = false;
};

// Cells are evaluated at their centres; row ib runs over omega.
struct TongueRaster {
  double r = 0.0;
  TongueWindow window;
  int res_b = 0;
  int res_omega = 0;
  std::size_t n = 0;
  std::vector<TongueCell> cells;

  const TongueCell& at(int ib, int iw) const {
    return cells[static_cast<std::size_t>(ib) * res_omega + iw];
  }
  double b_at(int ib) const;
  double omega_at(int iw) const;
  std::size_t member_count() const;
};

// Membership of each cell in the tongue of r: r in [lo - tol, hi + tol] with
// tol = 1/n + envelope modulus.
TongueRaster tongue_raster(double r, const TongueWindow& window, int res_b,
                           int res_omega, std::size_t n,
                           int grid_res = kDefaultEnvelopeGrid,
                           unsigned threads = 1);

// Average angular displacement of an orbit of the fattened annulus map,
// computed on the universal cover.
double annulus_rotation_number(const FattenedMap& map, AmbientPoint start,
                               std::size_t n);

struct OrbitRotation {
  std::size_t seed_index = 0;
  AmbientPoint start;
  double rho = 0.0;
  bool inside = false;
};

struct EndpointAttainment {
  double target = 0.0;
  long p = 0;
  long q = 1;
  // Residual of F~^q(z) - z - (p, 0) at the refined point.
  double residual = 0.0;
  AmbientPoint point;
  bool attained = false;
};

struct AnnulusRotationSettings {
  std::size_t seeds = 200;
  std::size_t n = 100000;
  int grid_res = kDefaultEnvelopeGrid;
  double inclusion_tol = 0.01;
  double attain_tol = 0.02;
  int max_denominator = 24;
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};

struct AnnulusRotationReport {
  RotationInterval interval;
  std::vector<OrbitRotation> orbits;
  // Set only when the interval is nondegenerate (b > 1).
  std::optional<EndpointAttainment> lo_end;
  std::optional<EndpointAttainment> hi_end;

  bool all_inside() const;
  bool endpoints_attained() const;
  double sampled_min() const;
  double sampled_max() const;
};

// Rotation numbers of random orbits of an annulus map checked against the
// rotation interval of its core circle map.  For a nondegenerate interval
// each endpoint is matched by a periodic orbit of the fattened map with
// rotation number p/q (q <= max_denominator) within attain_tol: the orbit is
// seeded at a periodic point of the circle map and refined by Newton.
AnnulusRotationReport annulus_rotation_check(
    const FattenedMap& map, const AnnulusRotationSettings& settings);

// Periodic point of the fattened annulus lift with F~^q(z) = z + (p, 0),
// or nullopt when the seeds fail to converge to residual < tol.
std::optional<EndpointAttainment> find_rotation_orbit(const FattenedMap& map,
                                                      long p, long q,
                                                      double tol = 1e-10);

// Smooth bump: 0 for |r| <= 1 - width, 1 at |r| = 1, cubic in between with
// zero slope at both ends.
double collar_bump(double r, double width);

// Annulus map that agrees with F away from the boundary collar and rotates
// each boundary circle rigidly: by interval.lo at r = -1 and interval.hi at
// r = +1.  Inside the collar the two are blended by collar_bump.
class BoundaryPushMap {
 public:
  BoundaryPushMap(FattenedMap map, RotationInterval interval,
                  double collar_width);

  AmbientPoint operator()(const AmbientPoint& p) const;
  AmbientPoint apply_lift(const AmbientPoint& p) const;

  const FattenedMap& base() const { return map_; }
  double collar_width() const { return width_; }

 private:
  FattenedMap map_;
  RotationInterval interval_;
  double width_;
};

BoundaryPushMap boundary_push(const FattenedMap& map,
                              const RotationInterval& interval,
                              double collar_width);

// Lift rotation number of an orbit of a boundary-push map.
double boundary_push_rotation_number(const BoundaryPushMap& map,
                                     AmbientPoint start, std::size_t n);

}  // namespace inlim

#endif  // INLIM_ROTATION_H_
