#ifndef INLIM_INVLIM_H_
#define INLIM_INVLIM_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "inlim/families.h"
#include "inlim/geometry.h"

namespace inlim {

inline constexpr double kDefaultThreadTol = 1e-9;
inline constexpr std::size_t kDefaultThreadLength = 32;

class InvalidThread : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoPreimageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated point (x_0, ..., x_k) of the inverse limit of f: every
// consecutive pair satisfies d(f(x_{i+1}), x_i) <= tol.
class Thread {
 public:
  // Throws InvalidThread if the entries are not backward consistent.
  Thread(Family family, std::vector<double> entries,
         double tol = kDefaultThreadTol);

  const Family& family() const { return family_; }
  const std::vector<double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double tol() const { return tol_; }

  // max_i d(f(x_{i+1}), x_i).
  double max_defect() const;

 private:
  Family family_;
  std::vector<double> entries_;
  double tol_;
};

// d_inf(u, v) = max_i min(d(u_i, v_i), 1) / (i + 1) over the stored entries.
// For truncated threads this is a lower bound of the product metric that is
// exact when the tails agree.  Throws std::invalid_argument on a length
// mismatch.
template <class T, class Dist>
double d_infty(std::span<const T> u, std::span<const T> v, Dist&& d) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("d_infty: threads of different length");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double term = std::min(static_cast<double>(d(u[i], v[i])), 1.0) /
                  static_cast<double>(i + 1);
    out = std::max(out, term);
  }
  return out;
}

// Uses the family's phase metric.
double d_infty(const Thread& u, const Thread& v);

// Natural extension: (f(x_0), x_0, ..., x_{k-1}).  Length is preserved.
Thread shift(const Thread& u);

struct Leftmost {};
struct Rightmost {};
struct RandomPreimage {
  std::reference_wrapper<std::mt19937_64> rng;
};
// L picks the preimage left of the turning point, R the one to its right.
struct BranchPreimage {
  char branch = 'L';
};
using PreimagePolicy =
    std::variant<Leftmost, Rightmost, RandomPreimage, BranchPreimage>;

// Appends a preimage of the last entry that lies in the stabilized image of
// the family.  Throws NoPreimageError when there is none (or the requested
// branch has none).
Thread extend_backward(const Thread& u, const PreimagePolicy& policy);

// Inverse of shift: drops x_0 and appends a preimage of the last entry.
Thread unshift(const Thread& u, const PreimagePolicy& policy);

// A thread of the given length whose x_0 is uniform in the stabilized
// interval and whose later entries are random preimages.
Thread random_thread(const Family& family, std::size_t length,
                     std::mt19937_64& rng, double tol = kDefaultThreadTol);

// Point of the fat space X x I; the parameter is the family member itself.
struct FatPoint {
  double x = 0.0;
  Family param = Family::tent(2.0);
};

// F(x, t) = (f_t(x), t).  The parameter is copied bit for bit.
FatPoint fat_apply(const FatPoint& fp);

struct EpsilonAudit {
  // max d(x1, x2) over colliding pairs; 0 when nothing collides.
  double epsilon = 0.0;
  std::size_t colliding_pairs = 0;
};

// Empirical epsilon of g on a sample: pairs whose images are closer than
// collision_tol are collisions.  All pairs are compared.
template <class T, class G, class DomainDist, class ImageDist>
EpsilonAudit epsilon_map_audit(std::span<const T> sample, G&& g,
                               DomainDist&& d, ImageDist&& e,
                               double collision_tol) {
  if (sample.size() < 2) {
    throw std::invalid_argument("epsilon_map_audit needs at least 2 points");
  }
  using Image = std::decay_t<decltype(g(sample[0]))>;
  std::vector<Image> images;
  images.reserve(sample.size());
  for (const auto& x : sample) images.push_back(g(x));
  EpsilonAudit out;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (e(images[i], images[j]) < collision_tol) {
        ++out.colliding_pairs;
        out.epsilon = std::max(out.epsilon,
                               static_cast<double>(d(sample[i], sample[j])));
      }
    }
  }
  return out;
}

// Planar version with Euclidean metrics on both sides; images are bucketed
// on a collision_tol grid so only nearby pairs are compared.
EpsilonAudit epsilon_map_audit_planar(
    std::span<const AmbientPoint> sample,
    const std::function<AmbientPoint(const AmbientPoint&)>& g,
    double collision_tol);

// Slice-preserving homeomorphism X x I -> X x I, given by its first
// component.
using SliceHomeo = std::function<double(double, const Family&)>;

// Finite-stage approximant H o pi_j of the parameterized Brown homeomorphism:
// (H(x_j, t), t).  It is a 1/(j+2)-map on threads.  Throws
// std::invalid_argument when the thread has no entry j.
FatPoint brown_stage(std::size_t j, const Thread& u,
                     const SliceHomeo& slice_homeo = {});

}  // namespace inlim

#endif  // INLIM_INVLIM_H_
