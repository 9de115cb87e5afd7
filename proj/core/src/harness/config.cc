#include "inlim/harness/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>

#include "inlim/harness/output.h"

namespace inlim::harness {
namespace {

using C = ExperimentConfig;
using Member = std::variant<double C::*, std::size_t C::*, int C::*,
                            unsigned C::*, std::string C::*>;

struct Field {
  std::string_view key;
  Member member;
};

// family.kind and rng.seed are handled separately.
const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"experiment.name", &C::name},
      {"family.s", &C::s},
      {"family.a", &C::a},
      {"family.b", &C::b},
      {"family.omega", &C::omega},
      {"grid.t_start", &C::t_start},
      {"grid.t_stop", &C::t_stop},
      {"grid.t_step", &C::t_step},
      {"fattening.delta", &C::delta},
      {"fattening.eps", &C::eps},
      {"fattening.theta0", &C::theta0},
      {"cloud.seeds", &C::seeds},
      {"cloud.transient", &C::transient},
      {"cloud.keep", &C::keep},
      {"cover.resolution", &C::cover_resolution},
      {"cover.steps", &C::cover_steps},
      {"rotation.n", &C::rotation_n},
      {"rotation.seeds", &C::rotation_seeds},
      {"rotation.grid_res", &C::grid_res},
      {"tongue.r", &C::tongue_r},
      {"tongue.b_lo", &C::tongue_b_lo},
      {"tongue.b_hi", &C::tongue_b_hi},
      {"tongue.omega_lo", &C::tongue_omega_lo},
      {"tongue.omega_hi", &C::tongue_omega_hi},
      {"tongue.res_b", &C::tongue_res_b},
      {"tongue.res_omega", &C::tongue_res_omega},
      {"tongue.n", &C::tongue_n},
      {"periodic.max_period", &C::max_period},
      {"periodic.tol", &C::periodic_tol},
      {"entropy.n", &C::entropy_n},
      {"output.dir", &C::out_dir},
      {"run.threads", &C::threads},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view what,
                            std::string_view value) {
  throw ConfigError(std::string(key) + ": expected " + std::string(what) +
                    ", got '" + std::string(value) + "'");
}

template <class T>
T parse_number(std::string_view key, std::string_view value,
               std::string_view what) {
  T out{};
  if (!value.empty() && value.front() == '+') value.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    bad_value(key, what, value);
  }
  return out;
}

void assign(C& cfg, const Field& f, std::string_view value) {
  std::visit(
      [&](auto member) {
        using T = std::remove_reference_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          cfg.*member = std::string(value);
        } else if constexpr (std::is_same_v<T, double>) {
          double v = parse_number<double>(f.key, value, "a number");
          if (!std::isfinite(v)) bad_value(f.key, "a finite number", value);
          cfg.*member = v;
        } else if constexpr (std::is_same_v<T, int>) {
          cfg.*member = parse_number<int>(f.key, value, "an integer");
        } else {
          if (!value.empty() && value.front() == '-') {
            bad_value(f.key, "a non-negative integer", value);
          }
          cfg.*member = parse_number<T>(f.key, value, "a non-negative integer");
        }
      },
      f.member);
}

std::string render(const C& cfg, const Field& f) {
  return std::visit(
      [&](auto member) -> std::string {
        using T = std::remove_cvref_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return cfg.*member;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(cfg.*member);
        } else {
          return std::to_string(cfg.*member);
        }
      },
      f.member);
}

[[noreturn]] void out_of_range(std::string_view key, double v,
                               std::string_view range) {
  throw ConfigError(std::string(key) + "=" + format_double(v) + " outside " +
                    std::string(range));
}

// Text values must survive a serialize/parse round trip.
void require_plain(std::string_view key, const std::string& v) {
  if (v.empty()) throw ConfigError(std::string(key) + ": must not be empty");
  if (v.find_first_of("#\n\r") != std::string::npos || trim(v) != v) {
    throw ConfigError(std::string(key) +
                      ": must not contain '#', line breaks, or edge spaces");
  }
}

void require(bool ok, std::string_view key, double v, std::string_view range) {
  if (!ok) out_of_range(key, v, range);
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    const auto& f = fields();
    k.push_back(f[0].key);
    k.push_back("family.kind");
    for (std::size_t i = 1; i < f.size(); ++i) k.push_back(f[i].key);
    k.push_back("rng.seed");
    return k;
  }();
  return keys;
}

ExperimentConfig parse_config(std::string_view text) {
  C cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value, got '" + std::string(line) + "'");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(std::string(key) + ": duplicate key on line " +
                        std::to_string(line_no));
    }
    if (key == "family.kind") {
      try {
        cfg.kind = family_kind_from_string(value);
      } catch (const std::exception&) {
        bad_value(key, "tent, quadratic or standard", value);
      }
      continue;
    }
    if (key == "rng.seed") {
      if (!value.empty() && value.front() == '-') {
        bad_value(key, "an unsigned 64-bit integer", value);
      }
      cfg.seed = parse_number<std::uint64_t>(key, value,
                                             "an unsigned 64-bit integer");
      continue;
    }
    bool known = false;
    for (const Field& f : fields()) {
      if (f.key == key) {
        assign(cfg, f, value);
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string out;
  for (std::string_view key : config_keys()) {
    std::string value;
    if (key == "family.kind") {
      value = std::string(to_string(cfg.kind));
    } else if (key == "rng.seed") {
      if (!cfg.seed) continue;
      value = std::to_string(*cfg.seed);
    } else {
      for (const Field& f : fields()) {
        if (f.key == key) value = render(cfg, f);
      }
    }
    out.append(key).append("=").append(value).append("\n");
  }
  return out;
}

void validate(const ExperimentConfig& c, bool allow_missing_seed) {
  require_plain("experiment.name", c.name);
  require(c.s >= 0.0 && c.s <= 2.0, "family.s", c.s, "[0, 2]");
  require(c.a >= -0.5 && c.a <= 2.0, "family.a", c.a, "[-0.5, 2]");
  require(c.b >= 0.0 && c.b <= kDefaultStandardBCap, "family.b", c.b,
          "[0, 8]");
  require(c.omega >= 0.0 && c.omega <= 1.0, "family.omega", c.omega, "[0, 1]");

  require(c.t_step > 0.0, "grid.t_step", c.t_step, "(0, inf)");
  require(c.t_start <= c.t_stop, "grid.t_start", c.t_start,
          "(-inf, grid.t_stop]");
  double lo = 0.0, hi = 2.0;
  const char* range = "[0, 2]";
  if (c.kind == FamilyKind::kQuadratic) {
    lo = -0.5;
    range = "[-0.5, 2]";
  } else if (c.kind == FamilyKind::kStandard) {
    hi = kDefaultStandardBCap;
    range = "[0, 8]";
  }
  require(c.t_start >= lo && c.t_start <= hi, "grid.t_start", c.t_start, range);
  require(c.t_stop >= lo && c.t_stop <= hi, "grid.t_stop", c.t_stop, range);
  require((c.t_stop - c.t_start) / c.t_step <= 1e5, "grid.t_step", c.t_step,
          "a range giving at most 1e5 grid points");

  require(c.delta > 0.0 && c.delta < 0.25, "fattening.delta", c.delta,
          "(0, 0.25)");
  require(c.eps > 0.0 && c.eps < 0.25, "fattening.eps", c.eps, "(0, 0.25)");

  require(c.seeds >= 1, "cloud.seeds", static_cast<double>(c.seeds), "[1, inf)");
  require(c.transient >= 100, "cloud.transient",
          static_cast<double>(c.transient), "[100, inf)");
  require(c.keep >= 1, "cloud.keep", static_cast<double>(c.keep), "[1, inf)");
  require(static_cast<double>(c.seeds) * static_cast<double>(c.keep) <= 1e8,
          "cloud.keep", static_cast<double>(c.keep),
          "a range with seeds*keep <= 1e8");

  require(c.cover_resolution >= 0 && c.cover_resolution <= kMaxCoverResolution,
          "cover.resolution", c.cover_resolution, "[0, 4096]");
  require(c.cover_steps >= 0 && c.cover_steps <= 1000, "cover.steps",
          c.cover_steps, "[0, 1000]");

  require(c.rotation_n >= 1, "rotation.n", static_cast<double>(c.rotation_n),
          "[1, inf)");
  require(c.rotation_seeds >= 1, "rotation.seeds",
          static_cast<double>(c.rotation_seeds), "[1, inf)");
  require(c.grid_res >= 2 && c.grid_res <= (1 << 20), "rotation.grid_res",
          c.grid_res, "[2, 1048576]");

  require(c.tongue_b_lo >= 0.0 && c.tongue_b_lo < c.tongue_b_hi,
          "tongue.b_lo", c.tongue_b_lo, "[0, tongue.b_hi)");
  require(c.tongue_b_hi <= kDefaultStandardBCap, "tongue.b_hi", c.tongue_b_hi,
          "(tongue.b_lo, 8]");
  require(c.tongue_omega_lo >= 0.0 && c.tongue_omega_lo < c.tongue_omega_hi,
          "tongue.omega_lo", c.tongue_omega_lo, "[0, tongue.omega_hi)");
  require(c.tongue_omega_hi <= 1.0, "tongue.omega_hi", c.tongue_omega_hi,
          "(tongue.omega_lo, 1]");
  require(c.tongue_res_b >= 1 && c.tongue_res_b <= 4096, "tongue.res_b",
          c.tongue_res_b, "[1, 4096]");
  require(c.tongue_res_omega >= 1 && c.tongue_res_omega <= 4096,
          "tongue.res_omega", c.tongue_res_omega, "[1, 4096]");
  require(c.tongue_n >= 1, "tongue.n", static_cast<double>(c.tongue_n),
          "[1, inf)");

  require(c.max_period >= 1 && c.max_period <= 8, "periodic.max_period",
          c.max_period, "[1, 8]");
  require(c.periodic_tol > 0.0, "periodic.tol", c.periodic_tol, "(0, inf)");
  require(c.entropy_n >= 4 && c.entropy_n <= kMaxTentPeriod, "entropy.n",
          c.entropy_n, "[4, 20]");

  require(c.threads <= 1024, "run.threads", c.threads, "[0, 1024]");
  require_plain("output.dir", c.out_dir);
  if (!c.seed && !allow_missing_seed) {
    throw ConfigError("rng.seed: required (set it in the config or pass --seed)");
  }
}

Family config_family(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case FamilyKind::kTent:
      return Family::tent(cfg.s);
    case FamilyKind::kQuadratic:
      return Family::quadratic(cfg.a);
    case FamilyKind::kStandard:
      return Family::standard(cfg.b, cfg.omega);
  }
  throw ConfigError("family.kind: unsupported");
}

Family config_family_at(const ExperimentConfig& cfg, double t) {
  switch (cfg.kind) {
    case FamilyKind::kTent:
      return Family::tent(t);
    case FamilyKind::kQuadratic:
      return Family::quadratic(t);
    case FamilyKind::kStandard:
      return Family::standard(t, cfg.omega);
  }
  throw ConfigError("family.kind: unsupported");
}

ManifoldModel config_model(const ExperimentConfig& cfg) {
  return cfg.kind == FamilyKind::kStandard ? ManifoldModel::annulus()
                                           : ManifoldModel::disk();
}

CloudSettings config_cloud(const ExperimentConfig& cfg) {
  return {cfg.seeds, cfg.transient, cfg.keep};
}

std::vector<double> config_grid(const ExperimentConfig& cfg) {
  const double span = cfg.t_stop - cfg.t_start;
  const auto steps = static_cast<std::size_t>(std::floor(span / cfg.t_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    grid.push_back(std::min(cfg.t_start + static_cast<double>(i) * cfg.t_step,
                            cfg.t_stop));
  }
  return grid;
}

}  // namespace inlim::harness
