#include <algorithm>
#include <stdexcept>

#include "inlim/suspension.h"

namespace inlim {

double ContinuityScan::max_distance() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.hausdorff);
  return worst;
}

ContinuityScan continuity_scan(const FamilyCurve& curve,
                               std::span<const double> grid,
                               const ContinuitySettings& settings) {
  if (grid.size() < 2) {
    throw std::invalid_argument("continuity scan needs at least two parameters");
  }
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("continuity grid must be sorted ascending");
  }
  const PlaneMetric metric = settings.model.is_annulus()
                                 ? PlaneMetric::kCylinder
                                 : PlaneMetric::kEuclidean;
  auto cloud_at = [&](const Family& fam) {
    FattenedMap map(settings.model, fam, settings.delta, settings.eps,
                    settings.theta0);
    return attract_cloud(map, settings.cloud, settings.rng_seed,
                         settings.threads)
        .points();
  };

  ContinuityScan scan;
  int common = 0;
  Family fam = curve(grid[0]);
  std::optional<int> stab = stabilization_index(fam);
  std::vector<AmbientPoint> prev = cloud_at(fam);
  auto note = [&](double t, const std::optional<int>& m) {
    if (m) {
      common = std::max(common, *m);
    } else {
      scan.offending.push_back(t);
    }
  };
  note(grid[0], stab);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    Family next_fam = curve(grid[i]);
    std::optional<int> next_stab = stabilization_index(next_fam);
    std::vector<AmbientPoint> next = cloud_at(next_fam);
    scan.rows.push_back({grid[i - 1], grid[i], hausdorff(prev, next, metric),
                         stab, next_stab});
    note(grid[i], next_stab);
    prev = std::move(next);
    stab = next_stab;
  }
  if (scan.offending.empty()) scan.common_iterate = common;
  return scan;
}

}  // namespace inlim
