#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "inlim/parallel.h"
#include "inlim/suspension.h"

namespace inlim {

std::vector<AmbientPoint> AttractorCloud::points() const {
  std::vector<AmbientPoint> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.point);
  return out;
}

double AttractorCloud::diameter_bound() const {
  if (samples.empty()) return 0.0;
  double x_lo = samples.front().point.x, x_hi = x_lo;
  double y_lo = samples.front().point.y, y_hi = y_lo;
  for (const auto& s : samples) {
    x_lo = std::min(x_lo, s.point.x);
    x_hi = std::max(x_hi, s.point.x);
    y_lo = std::min(y_lo, s.point.y);
    y_hi = std::max(y_hi, s.point.y);
  }
  double dx = x_hi - x_lo;
  if (model.is_annulus()) dx = std::min(dx, 0.5);
  return std::hypot(dx, y_hi - y_lo);
}

AmbientPoint cloud_seed_point(std::uint64_t rng_seed, std::size_t seed_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed),
                    static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(seed_index),
                    static_cast<std::uint32_t>(seed_index >> 32)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  std::uniform_real_distribution<double> uy(-1.0, 1.0);
  double x = ux(gen);
  return {x, uy(gen)};
}

std::vector<CloudSample> sample_orbits(const PlanarMap& map,
                                       const CloudSettings& settings,
                                       std::uint64_t rng_seed,
                                       unsigned threads) {
  if (settings.transient < 100) {
    throw std::invalid_argument("cloud transient must be >= 100, got " +
                                std::to_string(settings.transient));
  }
  if (settings.seeds == 0 || settings.keep == 0) {
    throw std::invalid_argument("cloud seeds and keep must be positive");
  }
  std::vector<CloudSample> out(settings.seeds * settings.keep);
  parallel_for(settings.seeds, threads, [&](std::size_t i) {
    AmbientPoint p = cloud_seed_point(rng_seed, i);
    for (std::size_t t = 0; t < settings.transient; ++t) p = map(p);
    for (std::size_t k = 0; k < settings.keep; ++k) {
      p = map(p);
      out[i * settings.keep + k] = {
          static_cast<std::uint32_t>(i),
          static_cast<std::uint32_t>(settings.transient + k + 1), p};
    }
  });
  return out;
}

AttractorCloud attract_cloud(const FattenedMap& map,
                             const CloudSettings& settings,
                             std::uint64_t rng_seed, unsigned threads) {
  AttractorCloud cloud;
  cloud.model = map.model();
  cloud.param = map.family();
  cloud.delta = map.delta();
  cloud.eps = map.eps();
  cloud.settings = settings;
  cloud.rng_seed = rng_seed;
  cloud.samples = sample_orbits(map.as_function(), settings, rng_seed, threads);
  return cloud;
}

BoxCover::BoxCover(ManifoldModel model, int resolution, bool full)
    : model_(model), resolution_(resolution) {
  if (resolution < 1 || resolution > kMaxCoverResolution) {
    throw std::invalid_argument("cover resolution " +
                                std::to_string(resolution) + " outside [1, " +
                                std::to_string(kMaxCoverResolution) + "]");
  }
  bits_.assign(static_cast<std::size_t>(resolution) * resolution,
               full ? 1 : 0);
}

std::size_t BoxCover::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool BoxCover::subset_of(const BoxCover& other) const {
  if (other.resolution_ != resolution_) {
    throw std::invalid_argument("covers of different resolution");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

int BoxCover::cell_x(double x) const {
  if (model_.is_annulus()) x = wrap_unit(x);
  int c = static_cast<int>(std::floor(x * resolution_));
  return std::clamp(c, 0, resolution_ - 1);
}

int BoxCover::cell_y(double y) const {
  int c = static_cast<int>(std::floor((y + 1.0) * 0.5 * resolution_));
  return std::clamp(c, 0, resolution_ - 1);
}

BoxCover attract_cover(const PlanarMap& map, ManifoldModel model,
                       int resolution, int steps, unsigned threads) {
  if (steps < 0) throw std::invalid_argument("cover steps must be >= 0");
  BoxCover cover(model, resolution, true);
  const int n = resolution;
  const bool periodic = model.is_annulus();
  for (int step = 0; step < steps; ++step) {
    BoxCover next(model, resolution, false);
    auto& out = next.bits();
    auto mark = [&](int cx, int cy) {
      for (int dy = -1; dy <= 1; ++dy) {
        int y = cy + dy;
        if (y < 0 || y >= n) continue;
        for (int dx = -1; dx <= 1; ++dx) {
          int x = cx + dx;
          if (periodic) {
            x = (x + n) % n;
          } else if (x < 0 || x >= n) {
            continue;
          }
          std::atomic_ref<std::uint8_t> cell(
              out[static_cast<std::size_t>(y) * n + x]);
          cell.store(1, std::memory_order_relaxed);
        }
      }
    };
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t row) {
      const int iy = static_cast<int>(row);
      for (int ix = 0; ix < n; ++ix) {
        if (!cover.occupied(ix, iy)) continue;
        for (int a = 0; a <= 2; ++a) {
          for (int b = 0; b <= 2; ++b) {
            AmbientPoint p{std::min((ix + 0.5 * a) * cover.cell_width(), 1.0),
                           std::min(-1.0 + (iy + 0.5 * b) * cover.cell_height(),
                                    1.0)};
            if (periodic) p.x = wrap_unit(p.x);
            AmbientPoint q = map(p);
            mark(next.cell_x(q.x), next.cell_y(q.y));
          }
        }
      }
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = out[i] && cover.bits()[i];
    }
    cover = std::move(next);
  }
  return cover;
}

BoxCover attract_cover(const FattenedMap& map, int resolution, int steps,
                       unsigned threads) {
  return attract_cover(map.as_function(), map.model(), resolution, steps,
                       threads);
}

}  // namespace inlim
