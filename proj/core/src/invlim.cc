#include "inlim/invlim.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace inlim {

Thread::Thread(Family family, std::vector<double> entries, double tol)
    : family_(family), entries_(std::move(entries)), tol_(tol) {
  if (entries_.empty()) throw InvalidThread("a thread needs at least x_0");
  if (family_.is_circle()) {
    for (double& x : entries_) x = wrap_unit(x);
  }
  double defect = max_defect();
  if (!(defect <= tol_)) {
    throw InvalidThread("thread is not backward consistent: defect " +
                        std::to_string(defect) + " > tol " +
                        std::to_string(tol_));
  }
}

double Thread::max_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    double fx = eval(family_, entries_[i + 1]);
    worst = std::max(worst, phase_distance(family_, fx, entries_[i]));
  }
  return worst;
}

double d_infty(const Thread& u, const Thread& v) {
  const Family& fam = u.family();
  return d_infty(std::span<const double>(u.entries()),
                 std::span<const double>(v.entries()),
                 [&fam](double a, double b) { return phase_distance(fam, a, b); });
}

Thread shift(const Thread& u) {
  std::vector<double> e;
  e.reserve(u.size());
  e.push_back(eval(u.family(), u[0]));
  for (std::size_t i = 0; i + 1 < u.size(); ++i) e.push_back(u[i]);
  return Thread(u.family(), std::move(e), u.tol());
}

namespace {

double choose_preimage(const Family& fam, double y,
                       const PreimagePolicy& policy) {
  std::vector<double> pre = preimages(fam, y, stabilized_interval(fam));
  if (pre.empty()) {
    throw NoPreimageError("no preimage of " + std::to_string(y) +
                          " in the stabilized set of " + fam.describe());
  }
  return std::visit(
      [&](const auto& pol) -> double {
        using P = std::decay_t<decltype(pol)>;
        if constexpr (std::is_same_v<P, Leftmost>) {
          return pre.front();
        } else if constexpr (std::is_same_v<P, Rightmost>) {
          return pre.back();
        } else if constexpr (std::is_same_v<P, RandomPreimage>) {
          std::uniform_int_distribution<std::size_t> pick(0, pre.size() - 1);
          return pre[pick(pol.rng.get())];
        } else {
          if (fam.is_circle()) {
            throw std::invalid_argument(
                "branch preimages need an interval family");
          }
          double c = critical_point(fam);
          for (double x : pre) {
            if (pol.branch == 'L' && x <= c) return x;
            if (pol.branch == 'R' && x >= c) return x;
          }
          throw NoPreimageError(std::string("no preimage on branch ") +
                                pol.branch);
        }
      },
      policy);
}

}  // namespace

Thread extend_backward(const Thread& u, const PreimagePolicy& policy) {
  std::vector<double> e = u.entries();
  e.push_back(choose_preimage(u.family(), e.back(), policy));
  return Thread(u.family(), std::move(e), u.tol());
}

Thread unshift(const Thread& u, const PreimagePolicy& policy) {
  std::vector<double> e(u.entries().begin() + 1, u.entries().end());
  e.push_back(choose_preimage(u.family(), u.entries().back(), policy));
  return Thread(u.family(), std::move(e), u.tol());
}

Thread random_thread(const Family& family, std::size_t length,
                     std::mt19937_64& rng, double tol) {
  if (length == 0) throw std::invalid_argument("thread length must be >= 1");
  IntervalBox core = stabilized_interval(family);
  std::uniform_real_distribution<double> u(core.lo, core.hi);
  double x0 = family.is_circle() ? wrap_unit(u(rng)) : u(rng);
  Thread t(family, {x0}, tol);
  while (t.size() < length) t = extend_backward(t, RandomPreimage{rng});
  return t;
}

FatPoint fat_apply(const FatPoint& fp) {
  return {eval(fp.param, fp.x), fp.param};
}

EpsilonAudit epsilon_map_audit_planar(
    std::span<const AmbientPoint> sample,
    const std::function<AmbientPoint(const AmbientPoint&)>& g,
    double collision_tol) {
  if (sample.size() < 2) {
    throw std::invalid_argument("epsilon_map_audit needs at least 2 points");
  }
  if (!(collision_tol > 0.0)) {
    throw std::invalid_argument("collision_tol must be positive");
  }
  std::vector<AmbientPoint> images;
  images.reserve(sample.size());
  for (const auto& p : sample) images.push_back(g(p));

  auto cell_of = [collision_tol](double v) {
    return static_cast<std::int64_t>(std::floor(v / collision_tol));
  };
  auto key = [](std::int64_t cx, std::int64_t cy) {
    return static_cast<std::uint64_t>(cx) * 0x9E3779B97F4A7C15ULL ^
           static_cast<std::uint64_t>(cy);
  };
  std::unordered_multimap<std::uint64_t, std::size_t> buckets;
  buckets.reserve(images.size() * 2);
  EpsilonAudit out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::int64_t cx = cell_of(images[i].x);
    std::int64_t cy = cell_of(images[i].y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto range = buckets.equal_range(key(cx + dx, cy + dy));
        for (auto it = range.first; it != range.second; ++it) {
          std::size_t j = it->second;
          double e = std::hypot(images[i].x - images[j].x,
                                images[i].y - images[j].y);
          if (e < collision_tol) {
            ++out.colliding_pairs;
            out.epsilon = std::max(
                out.epsilon, std::hypot(sample[i].x - sample[j].x,
                                        sample[i].y - sample[j].y));
          }
        }
      }
    }
    buckets.emplace(key(cx, cy), i);
  }
  return out;
}

FatPoint brown_stage(std::size_t j, const Thread& u,
                     const SliceHomeo& slice_homeo) {
  if (j >= u.size()) {
    throw std::invalid_argument("brown_stage: thread shorter than j+1");
  }
  double x = u[j];
  if (slice_homeo) x = slice_homeo(x, u.family());
  return {x, u.family()};
}

}  // namespace inlim
