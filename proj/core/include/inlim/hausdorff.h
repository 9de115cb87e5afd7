#ifndef INLIM_HAUSDORFF_H_
#define INLIM_HAUSDORFF_H_

#include <cstddef>
#include <span>
#include <vector>

#include "inlim/geometry.h"

namespace inlim {

// kCylinder treats x as an angle in R/Z (the annulus product metric).
enum class PlaneMetric { kEuclidean, kCylinder };

double plane_distance(PlaneMetric metric, const AmbientPoint& a,
                      const AmbientPoint& b);

// Uniform bucket grid over a point set answering nearest-neighbour distance
// queries by expanding rings of cells.
class NearestGrid {
 public:
  // cell <= 0 picks a cell from the bounding box and point count.
  NearestGrid(std::span<const AmbientPoint> points, PlaneMetric metric,
              double cell = 0.0);

  double nearest_distance(const AmbientPoint& p) const;
  double cell() const { return hx_; }

 private:
  double cell_distance(const AmbientPoint& p, long ix, long iy) const;

  std::vector<AmbientPoint> points_;  // sorted by cell
  std::vector<std::size_t> start_;    // CSR offsets, size nx*ny+1
  PlaneMetric metric_;
  double x0_ = 0.0;
  double y0_ = 0.0;
  double hx_ = 1.0;
  double hy_ = 1.0;
  long nx_ = 1;
  long ny_ = 1;
};

// sup_{a in A} inf_{b in B} d(a, b).
double directed_hausdorff(std::span<const AmbientPoint> a,
                          std::span<const AmbientPoint> b,
                          PlaneMetric metric = PlaneMetric::kEuclidean,
                          double expected_distance = 0.0);

// Symmetric Hausdorff distance.  Throws std::invalid_argument on empty
// input.  expected_distance, when known, sets the grid cell to a quarter of
// it (never below 1e-4).
double hausdorff(std::span<const AmbientPoint> a,
                 std::span<const AmbientPoint> b,
                 PlaneMetric metric = PlaneMetric::kEuclidean,
                 double expected_distance = 0.0);

}  // namespace inlim

#endif  // INLIM_HAUSDORFF_H_
