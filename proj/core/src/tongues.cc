#include <algorithm>
#include <stdexcept>

#include "inlim/parallel.h"
#include "inlim/rotation.h"

namespace inlim {

double TongueRaster::b_at(int ib) const {
  return window.b_lo + (ib + 0.5) * (window.b_hi - window.b_lo) / res_b;
}

double TongueRaster::omega_at(int iw) const {
  return window.omega_lo +
         (iw + 0.5) * (window.omega_hi - window.omega_lo) / res_omega;
}

std::size_t TongueRaster::member_count() const {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](const TongueCell& c) { return c.member; }));
}

TongueRaster tongue_raster(double r, const TongueWindow& window, int res_b,
                           int res_omega, std::size_t n, int grid_res,
                           unsigned threads) {
  if (res_b < 1 || res_omega < 1) {
    throw std::invalid_argument("tongue raster resolution must be positive");
  }
  if (!(window.b_lo >= 0.0 && window.b_lo < window.b_hi &&
        window.b_hi <= kDefaultStandardBCap)) {
    throw std::invalid_argument("tongue window b range invalid");
  }
  if (!(window.omega_lo >= 0.0 && window.omega_lo < window.omega_hi &&
        window.omega_hi <= 1.0)) {
    throw std::invalid_argument("tongue window omega range must lie in [0,1]");
  }
  TongueRaster raster;
  raster.r = r;
  raster.window = window;
  raster.res_b = res_b;
  raster.res_omega = res_omega;
  raster.n = n;
  raster.cells.resize(static_cast<std::size_t>(res_b) * res_omega);
  parallel_for(raster.cells.size(), threads, [&](std::size_t idx) {
    const int ib = static_cast<int>(idx / res_omega);
    const int iw = static_cast<int>(idx % res_omega);
    TongueCell& cell = raster.cells[idx];
    cell.b = raster.b_at(ib);
    cell.omega = raster.omega_at(iw);
    cell.interval =
        rotation_interval(Family::standard(cell.b, cell.omega), n, grid_res);
    cell.member = cell.interval.contains(r, cell.interval.half_width);
  });
  return raster;
}

}  // namespace inlim
