#ifndef INLIM_HARNESS_CONFIG_H_
#define INLIM_HARNESS_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inlim/families.h"
#include "inlim/geometry.h"
#include "inlim/rotation.h"
#include "inlim/suspension.h"

namespace inlim::harness {

// Parse and validation errors; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key=value experiment description.  Keys carry a section prefix
// (family.kind, cloud.seeds, ...); see config_keys() for the full list.
struct ExperimentConfig {
  std::string name = "run";

  FamilyKind kind = FamilyKind::kTent;
  double s = 1.8;
  double a = 1.8;
  double b = 0.8;
  double omega = 0.2;

  // Parameter sweep for the continuity scan: the primary parameter of the
  // family runs over t_start, t_start + t_step, ..., t_stop.
  double t_start = 1.2;
  double t_stop = 1.9;
  double t_step = 0.01;

  double delta = 0.01;
  double eps = 0.01;
  double theta0 = kDefaultTheta0;

  std::size_t seeds = 200;
  std::size_t transient = 1000;
  std::size_t keep = 100;

  // 0 disables the cover raster.
  int cover_resolution = 0;
  int cover_steps = 8;

  std::size_t rotation_n = 100000;
  std::size_t rotation_seeds = 200;
  int grid_res = kDefaultEnvelopeGrid;

  double tongue_r = 0.0;
  double tongue_b_lo = 0.0;
  double tongue_b_hi = 1.0;
  double tongue_omega_lo = 0.0;
  double tongue_omega_hi = 1.0;
  int tongue_res_b = 100;
  int tongue_res_omega = 100;
  std::size_t tongue_n = 10000;

  int max_period = 6;
  double periodic_tol = 1e-9;

  int entropy_n = 14;

  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  unsigned threads = 1;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Keys in serialization order.
const std::vector<std::string_view>& config_keys();

// Unknown keys, duplicate keys, malformed lines, and unparsable values throw
// ConfigError.  Missing keys keep their defaults.  '#' starts a comment.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

// Every key, doubles with 17 significant digits.  An unset seed is omitted.
std::string serialize_config(const ExperimentConfig& cfg);

// Range checks against the module preconditions; throws ConfigError.
// Unless allow_missing_seed, rng.seed must be set.
void validate(const ExperimentConfig& cfg, bool allow_missing_seed = false);

// The configured family member (primary parameter from family.s, family.a,
// or family.b).
Family config_family(const ExperimentConfig& cfg);
// The same family with its primary parameter replaced by t.
Family config_family_at(const ExperimentConfig& cfg, double t);
ManifoldModel config_model(const ExperimentConfig& cfg);
CloudSettings config_cloud(const ExperimentConfig& cfg);
// t_start, t_start + t_step, ... up to t_stop (inclusive within step/2).
std::vector<double> config_grid(const ExperimentConfig& cfg);

}  // namespace inlim::harness

#endif  // INLIM_HARNESS_CONFIG_H_
