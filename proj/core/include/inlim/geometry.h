#ifndef INLIM_GEOMETRY_H_
#define INLIM_GEOMETRY_H_

#include <optional>

namespace inlim {

// The two carriers.  The disk is the rectangle [0,1]x[-1,1] with spine
// {y = 0}; the annulus is (R/Z)x[-1,1] with the core circle {r = 0} as spine.
enum class ManifoldKind { kDisk, kAnnulus };

struct ManifoldModel {
  ManifoldKind kind = ManifoldKind::kDisk;

  static constexpr ManifoldModel disk() { return {ManifoldKind::kDisk}; }
  static constexpr ManifoldModel annulus() { return {ManifoldKind::kAnnulus}; }

  constexpr bool is_annulus() const { return kind == ManifoldKind::kAnnulus; }
  friend constexpr bool operator==(ManifoldModel, ManifoldModel) = default;
};

// Boundary component: y = +1 (kPlus) or y = -1 (kMinus).
enum class Side { kPlus, kMinus };

// A point of the carrier.  For the annulus, x is the angle theta in [0,1)
// and y is the radial coordinate r.
struct AmbientPoint {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const AmbientPoint&,
                                   const AmbientPoint&) = default;
};

// Collar coordinate (eta, s): eta = (position along the boundary, side),
// s in [0,1] measures the distance travelled along the collar arc.  s = 0 is
// the boundary, s = 1 the spine.
struct CollarCoord {
  double eta = 0.0;
  Side side = Side::kPlus;
  double s = 0.0;
};

// Reduces to [0,1).
double wrap_unit(double x);
// Arc distance on R/Z, in [0, 1/2].
double circle_distance(double a, double b);

bool in_carrier(ManifoldModel m, AmbientPoint p);
// Euclidean on the disk; sqrt(arc^2 + dr^2) on the annulus.
double carrier_distance(ManifoldModel m, AmbientPoint a, AmbientPoint b);

// Psi(eta, s).  Disk: ((x,+),s) -> (x, 1-s), ((x,-),s) -> (x, s-1); the
// annulus is the same in (theta, r) with theta reduced mod 1.  The vertical
// edges {0,1}x[-1,1] of the rectangle are the collar fibres over eta = 0 and
// eta = 1.  Throws std::domain_error for s outside [0,1] or a disk eta
// outside [0,1].
AmbientPoint collar_to_ambient(ManifoldModel m, CollarCoord c);

// Inverse of collar_to_ambient off the spine.  Spine points report s = 1 on
// the + side.  Throws std::out_of_range outside the carrier.
CollarCoord ambient_to_collar(ManifoldModel m, AmbientPoint p);

// R(Psi(eta, s)) = Psi(eta, 1): collapses the collar coordinate.
AmbientPoint retraction(ManifoldModel m, AmbientPoint p);

// phi(s) = min(2s, 1).
double phi(double s);
// (1-delta) phi(s) + delta s: a homeomorphism of [0,1] within delta/2 of phi.
double phi_delta(double s, double delta);

// Upsilon(Psi(eta,s)) = Psi(eta, phi(s)); with delta, phi_delta replaces phi
// and the result is a homeomorphism.  Collar points with s >= 1/2 (the
// neighbourhood N(E)) are sent to the spine when delta is absent.
AmbientPoint upsilon(ManifoldModel m, AmbientPoint p,
                     std::optional<double> delta = std::nullopt);

}  // namespace inlim

#endif  // INLIM_GEOMETRY_H_
