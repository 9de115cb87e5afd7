#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "inlim/suspension.h"

namespace inlim {
namespace {

constexpr int kHenonRedraws = 64;

}  // namespace

AmbientPoint henon_apply(double a, double b, const AmbientPoint& p,
                         double escape_radius) {
  if (!(a >= -1.0 && a <= 2.5)) {
    throw std::invalid_argument("Henon a=" + std::to_string(a) +
                                " outside [-1, 2.5]");
  }
  if (!(std::fabs(b) <= 1.0)) {
    throw std::invalid_argument("Henon |b| must be <= 1");
  }
  AmbientPoint q{a - p.x * p.x + b * p.y, p.x};
  if (!(std::fabs(q.x) <= escape_radius && std::fabs(q.y) <= escape_radius)) {
    throw HenonEscape("Henon orbit left radius " + std::to_string(escape_radius));
  }
  return q;
}

std::vector<AmbientPoint> henon_cloud(double a, double b,
                                      const CloudSettings& settings,
                                      std::uint64_t rng_seed,
                                      std::size_t* escaped) {
  if (settings.transient < 100 || settings.seeds == 0 || settings.keep == 0) {
    throw std::invalid_argument(
        "Henon cloud needs transient >= 100 and positive seeds and keep");
  }
  std::size_t lost = 0;
  std::vector<AmbientPoint> out;
  out.reserve(settings.seeds * settings.keep);
  std::vector<AmbientPoint> orbit(settings.keep);
  for (std::size_t i = 0; i < settings.seeds; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(rng_seed),
                      static_cast<std::uint32_t>(rng_seed >> 32),
                      static_cast<std::uint32_t>(i), 0x48u};
    std::mt19937_64 gen(seq);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int attempt = 0; attempt < kHenonRedraws; ++attempt) {
      AmbientPoint p{u(gen), 0.0};
      p.y = u(gen);
      try {
        for (std::size_t t = 0; t < settings.transient; ++t) {
          p = henon_apply(a, b, p);
        }
        for (auto& q : orbit) q = p = henon_apply(a, b, p);
        out.insert(out.end(), orbit.begin(), orbit.end());
        break;
      } catch (const HenonEscape&) {
        ++lost;
      }
    }
  }
  if (escaped) *escaped = lost;
  return out;
}

}  // namespace inlim
