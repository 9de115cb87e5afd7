#ifndef INLIM_SUSPENSION_H_
#define INLIM_SUSPENSION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "inlim/families.h"
#include "inlim/geometry.h"
#include "inlim/hausdorff.h"

namespace inlim {

inline constexpr double kDefaultTheta0 = 0.17;

using PlanarMap = std::function<AmbientPoint(const AmbientPoint&)>;

// Injective fattening H of the spine dynamics into the carrier.
//
// Disk (interval families).  The phase interval is embedded affinely onto
// [m, 1-m] of the spine, m = delta (1 + 2 eps), and g is f read in that
// coordinate (constant outside [m, 1-m]).  Then
//
//   H(u, v) = ( g(u) + delta (v - eps (2u - 1)),  eps (2u - 1) ).
//
// The second coordinate recovers u and the first then recovers v, so H is
// injective; the image lies in [delta eps, 1 - delta eps] x [-eps, eps].  The correction vanishes
// on {v = eps (2u - 1)}, so every fixed point of f gives a fixed point of H
// and H -> (g(u), 0) uniformly as delta, eps -> 0.
//
// Annulus (standard family).
//
//   H(theta, r) = ( f(theta) + delta r  mod 1,  eps cos(2 pi (theta - theta0)) )
//
// which is not injective everywhere; see the epsilon-map audit.
class FattenedMap {
 public:
  // delta and eps must lie in (0, 1/4).  Throws std::invalid_argument.
  FattenedMap(ManifoldModel model, Family family, double delta, double eps,
              double theta0 = kDefaultTheta0);

  // delta = eps = 0: the spine dynamics composed with the retraction.
  static FattenedMap spine_limit(ManifoldModel model, Family family,
                                 double theta0 = kDefaultTheta0);

  AmbientPoint operator()(const AmbientPoint& p) const;
  // Annulus step on the universal cover; theta is not reduced.
  AmbientPoint apply_lift(const AmbientPoint& p) const;

  // The map induced on the spine: g on the disk (spine coordinates), f on the
  // core circle.
  double spine_map(double u) const;
  // Phase <-> spine coordinate (identity up to wrapping on the annulus).
  double to_spine(double phase) const;
  double to_phase(double u) const;
  double spine_margin() const { return margin_; }

  ManifoldModel model() const { return model_; }
  const Family& family() const { return family_; }
  double delta() const { return delta_; }
  double eps() const { return eps_; }
  double theta0() const { return theta0_; }

  PlanarMap as_function() const;

 private:
  struct Unchecked {};
  FattenedMap(Unchecked, ManifoldModel model, Family family, double delta,
              double eps, double theta0);

  ManifoldModel model_;
  Family family_;
  double delta_;
  double eps_;
  double theta0_;
  double margin_ = 0.0;
  double phase_lo_ = 0.0;
  double phase_width_ = 1.0;
};

AmbientPoint fattened_apply(const FattenedMap& map, const AmbientPoint& p);

struct CloudSettings {
  std::size_t seeds = 200;
  std::size_t transient = 1000;
  std::size_t keep = 100;
};

struct CloudSample {
  std::uint32_t seed_index = 0;
  // Number of map applications that produced the point.
  std::uint32_t iter = 0;
  AmbientPoint point;
};

struct AttractorCloud {
  ManifoldModel model;
  Family param = Family::tent(2.0);
  double delta = 0.0;
  double eps = 0.0;
  CloudSettings settings;
  std::uint64_t rng_seed = 0;
  std::vector<CloudSample> samples;

  std::vector<AmbientPoint> points() const;
  // Bounding-box diagonal, an upper bound for the diameter.
  double diameter_bound() const;
};

// Initial point of seed i: uniform in the carrier, from an engine seeded by
// (rng_seed, i) so results do not depend on the thread count.
AmbientPoint cloud_seed_point(std::uint64_t rng_seed, std::size_t seed_index);

// Iterates every seed `transient` times and then keeps `keep` points per
// seed.  Requires transient >= 100.
std::vector<CloudSample> sample_orbits(const PlanarMap& map,
                                       const CloudSettings& settings,
                                       std::uint64_t rng_seed,
                                       unsigned threads = 1);
AttractorCloud attract_cloud(const FattenedMap& map,
                             const CloudSettings& settings,
                             std::uint64_t rng_seed, unsigned threads = 1);

inline constexpr int kMaxCoverResolution = 4096;

// Occupancy grid over the carrier: resolution x resolution cells covering
// [0,1] x [-1,1].
class BoxCover {
 public:
  BoxCover(ManifoldModel model, int resolution, bool full);

  ManifoldModel model() const { return model_; }
  int resolution() const { return resolution_; }
  std::size_t count() const;
  bool occupied(int ix, int iy) const {
    return bits_[static_cast<std::size_t>(iy) * resolution_ + ix] != 0;
  }
  void set(int ix, int iy) {
    bits_[static_cast<std::size_t>(iy) * resolution_ + ix] = 1;
  }
  bool subset_of(const BoxCover& other) const;

  int cell_x(double x) const;
  int cell_y(double y) const;
  double cell_width() const { return 1.0 / resolution_; }
  double cell_height() const { return 2.0 / resolution_; }

  std::vector<std::uint8_t>& bits() { return bits_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  ManifoldModel model_;
  int resolution_;
  std::vector<std::uint8_t> bits_;
};

// Outer approximation of the attractor.  Starting from the full carrier, each
// step maps a 3x3 sample (corners, edge midpoints, centre) of every occupied
// cell, marks the hit cells dilated by one cell, and intersects with the
// previous cover, so cover(n+1) is a subset of cover(n).  Resolution is
// capped at kMaxCoverResolution.
BoxCover attract_cover(const PlanarMap& map, ManifoldModel model,
                       int resolution, int steps, unsigned threads = 1);
BoxCover attract_cover(const FattenedMap& map, int resolution, int steps,
                       unsigned threads = 1);

// sup over the cloud of d(f(R(z)), R(H(z))) with R the spine retraction.
double semiconjugacy_residual(const FattenedMap& map,
                              std::span<const AmbientPoint> cloud);

struct PeriodicOrbitMatch {
  double phase_seed = 0.0;
  AmbientPoint point;
  double residual = 0.0;
  bool converged = false;
};

struct PeriodMatch {
  int period = 0;
  std::size_t expected = 0;  // #Fix(T_s^n)
  std::size_t matched = 0;   // converged and pairwise distinct
  std::size_t failures = 0;  // seeds whose Newton solve did not converge
  double max_residual = 0.0;
  double min_separation = 0.0;  // infinity with fewer than two points
  std::vector<PeriodicOrbitMatch> points;

  bool ok() const { return matched == expected && failures == 0; }
};

struct PeriodicReport {
  std::vector<PeriodMatch> periods;
  bool all_matched() const;
};

// Fixed points of H^n for n = 1..max_period, found by damped Newton from the
// exact tent periodic points lifted to the disk.  Requires a disk map over the
// tent family with s in (1,2] and max_period <= 8.
PeriodicReport periodic_match(const FattenedMap& map, int max_period,
                              double tol = 1e-9);

using FamilyCurve = std::function<Family(double)>;

struct ContinuitySettings {
  ManifoldModel model;
  double delta = 0.01;
  double eps = 0.01;
  double theta0 = kDefaultTheta0;
  CloudSettings cloud;
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};

struct ContinuityRow {
  double t = 0.0;
  double t_next = 0.0;
  double hausdorff = 0.0;
  std::optional<int> stabilization_t;
  std::optional<int> stabilization_next;
};

struct ContinuityScan {
  std::vector<ContinuityRow> rows;
  // Parameters whose map never stabilizes (within the search budget).
  std::vector<double> offending;
  // Largest least stabilization index over the grid, when every member
  // stabilizes.
  std::optional<int> common_iterate;

  double max_distance() const;
};

// Hausdorff distances between attractor clouds of consecutive grid members,
// all sampled with the same rng seed.  The grid must be sorted ascending.
ContinuityScan continuity_scan(const FamilyCurve& curve,
                               std::span<const double> grid,
                               const ContinuitySettings& settings);

class HenonEscape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kHenonEscapeRadius = 1e3;

// (x, y) -> (a - x^2 + b y, x).  Accepts a in [-1, 2.5] and |b| <= 1; throws
// HenonEscape when the image leaves the escape radius.
AmbientPoint henon_apply(double a, double b, const AmbientPoint& p,
                         double escape_radius = kHenonEscapeRadius);

// Attractor cloud of the Henon map; escaping seeds are redrawn (up to 64
// times) and counted in *escaped.
std::vector<AmbientPoint> henon_cloud(double a, double b,
                                      const CloudSettings& settings,
                                      std::uint64_t rng_seed,
                                      std::size_t* escaped = nullptr);

// Places a Henon point in the disk of a fattened quadratic map: x goes
// through the spine embedding, y is the eps-scaled spine recorder.
AmbientPoint henon_to_disk(const FattenedMap& map, const AmbientPoint& h);

}  // namespace inlim

#endif  // INLIM_SUSPENSION_H_
