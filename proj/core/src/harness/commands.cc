#include "inlim/harness/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "inlim/harness/verify.h"
#include "inlim/rotation.h"
#include "inlim/suspension.h"

#ifndef INLIM_VERSION
#define INLIM_VERSION "unknown"
#endif

namespace inlim::harness {
namespace {

class Session {
 public:
  Session(std::string command, const ExperimentConfig& cfg)
      : command_(std::move(command)),
        cfg_(cfg),
        start_(std::chrono::steady_clock::now()) {
    result_.out_dir = cfg.out_dir;
    std::filesystem::create_directories(result_.out_dir);
  }

  void write(const std::string& name, std::string_view data) {
    write_atomic(result_.out_dir / name, data);
    result_.manifest.add_file(name, data);
    result_.files.push_back(name);
  }

  RunManifest& manifest() { return result_.manifest; }
  void say(std::string line) { result_.report.push_back(std::move(line)); }
  void fail() { result_.ok = false; }

  CommandResult finish() {
    RunManifest m;
    m.set("tool", std::string("inlim"));
    m.set("version", std::string(INLIM_VERSION));
    m.set("command", command_);
    for (const auto& [k, v] : parse_key_values(serialize_config(cfg_))) {
      m.set("config." + k, v);
    }
    for (const auto& [k, v] : result_.manifest.entries()) m.set(k, v);
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
    m.set("wall_seconds", wall);
    result_.manifest = m;
    write_atomic(result_.out_dir / "manifest.txt", m.str());
    result_.files.push_back("manifest.txt");
    return std::move(result_);
  }

 private:
  std::string command_;
  const ExperimentConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  CommandResult result_;
};

FattenedMap config_map(const ExperimentConfig& cfg) {
  return FattenedMap(config_model(cfg), config_family(cfg), cfg.delta, cfg.eps,
                     cfg.theta0);
}

void require_kind(const ExperimentConfig& cfg, FamilyKind kind,
                  std::string_view command) {
  if (cfg.kind != kind) {
    throw ConfigError("family.kind: " + std::string(command) + " needs " +
                      std::string(to_string(kind)) + ", got " +
                      std::string(to_string(cfg.kind)));
  }
}

std::string optional_index(const std::optional<int>& m) {
  return m ? std::to_string(*m) : std::string("none");
}

}  // namespace

CommandResult cmd_attractor(const ExperimentConfig& cfg) {
  validate(cfg);
  Session session("attractor", cfg);
  FattenedMap map = config_map(cfg);
  AttractorCloud cloud =
      attract_cloud(map, config_cloud(cfg), *cfg.seed, cfg.threads);
  Csv csv({"seed_index", "iter", "x_or_theta", "y_or_r"});
  for (const CloudSample& s : cloud.samples) {
    csv.row(s.seed_index, s.iter, s.point.x, s.point.y);
  }
  session.write("cloud.csv", csv.str());
  session.manifest().set("cloud.points",
                         static_cast<std::uint64_t>(cloud.samples.size()));
  session.manifest().set("cloud.diameter_bound", cloud.diameter_bound());
  session.say("cloud: " + std::to_string(cloud.samples.size()) +
              " points, diameter <= " + format_double(cloud.diameter_bound()));
  if (cfg.cover_resolution > 0) {
    BoxCover cover =
        attract_cover(map, cfg.cover_resolution, cfg.cover_steps, cfg.threads);
    const int n = cover.resolution();
    session.write("cover.ppm", p6_pixmap(n, n, [&](int row, int col) {
                    return cover.occupied(col, n - 1 - row);
                  }));
    session.manifest().set("cover.cells",
                           static_cast<std::uint64_t>(cover.count()));
    session.say("cover: " + std::to_string(cover.count()) + " of " +
                std::to_string(n * n) + " cells");
  }
  return session.finish();
}

CommandResult cmd_tongues(const ExperimentConfig& cfg) {
  validate(cfg);
  Session session("tongues", cfg);
  TongueWindow window{cfg.tongue_b_lo, cfg.tongue_b_hi, cfg.tongue_omega_lo,
                      cfg.tongue_omega_hi};
  TongueRaster raster =
      tongue_raster(cfg.tongue_r, window, cfg.tongue_res_b,
                    cfg.tongue_res_omega, cfg.tongue_n, cfg.grid_res, cfg.threads);
  // Largest b on the top row.
  session.write("tongues.ppm",
                p6_pixmap(raster.res_omega, raster.res_b, [&](int row, int col) {
                  return raster.at(raster.res_b - 1 - row, col).member;
                }));
  Csv csv({"b", "omega", "rho_lo", "rho_hi", "member"});
  double half_width = 0.0;
  for (const TongueCell& c : raster.cells) {
    csv.row(c.b, c.omega, c.interval.lo, c.interval.hi, c.member);
    half_width = std::max(half_width, c.interval.half_width);
  }
  session.write("tongues.csv", csv.str());
  session.manifest().set("tongue.members",
                         static_cast<std::uint64_t>(raster.member_count()));
  session.manifest().set("tongue.half_width", half_width);
  session.say("tongue r=" + format_double(cfg.tongue_r) + ": " +
              std::to_string(raster.member_count()) + " of " +
              std::to_string(raster.cells.size()) + " cells");
  return session.finish();
}

CommandResult cmd_rotation(const ExperimentConfig& cfg) {
  validate(cfg);
  require_kind(cfg, FamilyKind::kStandard, "rotation");
  Session session("rotation", cfg);
  FattenedMap map = config_map(cfg);
  AnnulusRotationSettings settings;
  settings.seeds = cfg.rotation_seeds;
  settings.n = cfg.rotation_n;
  settings.grid_res = cfg.grid_res;
  settings.rng_seed = *cfg.seed;
  settings.threads = cfg.threads;
  AnnulusRotationReport report = annulus_rotation_check(map, settings);
  const RotationInterval& iv = report.interval;

  Csv interval({"b", "omega", "rho_lo", "rho_hi", "half_width"});
  interval.row(cfg.b, cfg.omega, iv.lo, iv.hi, iv.half_width);
  session.write("interval.csv", interval.str());
  Csv orbits({"seed_index", "theta0", "r0", "rho", "inside"});
  for (const OrbitRotation& o : report.orbits) {
    orbits.row(o.seed_index, o.start.x, o.start.y, o.rho, o.inside);
  }
  session.write("orbits.csv", orbits.str());

  RunManifest& m = session.manifest();
  m.set("rotation.sampled_min", report.sampled_min());
  m.set("rotation.sampled_max", report.sampled_max());
  m.set("rotation.all_inside", std::string(report.all_inside() ? "1" : "0"));
  auto endpoint = [&](const char* tag,
                      const std::optional<EndpointAttainment>& e) {
    if (!e) return;
    std::string key = std::string("rotation.") + tag;
    m.set(key + ".attained", std::string(e->attained ? "1" : "0"));
    if (e->attained) {
      m.set(key + ".p_over_q",
            std::to_string(e->p) + "/" + std::to_string(e->q));
      m.set(key + ".residual", e->residual);
    }
  };
  endpoint("lo_end", report.lo_end);
  endpoint("hi_end", report.hi_end);
  session.say("interval [" + format_double(iv.lo) + ", " + format_double(iv.hi) +
              "] +- " + format_double(iv.half_width));
  session.say("sampled [" + format_double(report.sampled_min()) + ", " +
              format_double(report.sampled_max()) + "]" +
              (report.all_inside() ? "" : " (outside the interval)"));
  if (!report.all_inside() || !report.endpoints_attained()) session.fail();
  return session.finish();
}

CommandResult cmd_continuity(const ExperimentConfig& cfg) {
  validate(cfg);
  Session session("continuity", cfg);
  ContinuitySettings settings;
  settings.model = config_model(cfg);
  settings.delta = cfg.delta;
  settings.eps = cfg.eps;
  settings.theta0 = cfg.theta0;
  settings.cloud = config_cloud(cfg);
  settings.rng_seed = *cfg.seed;
  settings.threads = cfg.threads;
  std::vector<double> grid = config_grid(cfg);
  ContinuityScan scan = continuity_scan(
      [&cfg](double t) { return config_family_at(cfg, t); }, grid, settings);
  Csv csv({"t", "t_next", "hausdorff", "stabilization_t",
           "stabilization_next"});
  for (const ContinuityRow& r : scan.rows) {
    csv.row(r.t, r.t_next, r.hausdorff, optional_index(r.stabilization_t),
            optional_index(r.stabilization_next));
  }
  session.write("continuity.csv", csv.str());
  RunManifest& m = session.manifest();
  m.set("continuity.max_distance", scan.max_distance());
  m.set("continuity.common_iterate", optional_index(scan.common_iterate));
  std::string offending;
  for (double t : scan.offending) {
    if (!offending.empty()) offending += ';';
    offending += format_double(t);
  }
  m.set("continuity.offending", offending);
  session.say(std::to_string(scan.rows.size()) + " pairs, max d_H " +
              format_double(scan.max_distance()));
  if (!scan.offending.empty()) {
    session.say(std::to_string(scan.offending.size()) +
                " parameters never stabilize; continuity is not guaranteed");
  }
  return session.finish();
}

CommandResult cmd_periodic(const ExperimentConfig& cfg) {
  validate(cfg);
  require_kind(cfg, FamilyKind::kTent, "periodic");
  if (!(cfg.s > 1.0)) {
    throw ConfigError("family.s: periodic needs s in (1, 2], got " +
                      format_double(cfg.s));
  }
  Session session("periodic", cfg);
  FattenedMap map = config_map(cfg);
  PeriodicReport report = periodic_match(map, cfg.max_period, cfg.periodic_tol);
  Csv csv({"period", "index", "x", "y", "residual", "phase_seed"});
  for (const PeriodMatch& pm : report.periods) {
    for (std::size_t i = 0; i < pm.points.size(); ++i) {
      const PeriodicOrbitMatch& p = pm.points[i];
      csv.row(pm.period, i, p.point.x, p.point.y, p.residual, p.phase_seed);
    }
    std::string key = "periodic." + std::to_string(pm.period);
    session.manifest().set(key + ".expected",
                           static_cast<std::uint64_t>(pm.expected));
    session.manifest().set(key + ".matched",
                           static_cast<std::uint64_t>(pm.matched));
    session.manifest().set(key + ".failures",
                           static_cast<std::uint64_t>(pm.failures));
    session.manifest().set(key + ".max_residual", pm.max_residual);
    session.say("period " + std::to_string(pm.period) + ": " +
                std::to_string(pm.matched) + "/" + std::to_string(pm.expected) +
                " matched, max residual " + format_double(pm.max_residual));
  }
  session.write("periodic.csv", csv.str());
  if (!report.all_matched()) session.fail();
  return session.finish();
}

CommandResult cmd_entropy(const ExperimentConfig& cfg) {
  validate(cfg);
  require_kind(cfg, FamilyKind::kTent, "entropy");
  if (!(cfg.s > 1.0)) {
    throw ConfigError("family.s: entropy needs s in (1, 2], got " +
                      format_double(cfg.s));
  }
  Session session("entropy", cfg);
  Csv csv({"s", "n", "count", "estimate", "log_s"});
  for (int n = 4; n <= cfg.entropy_n; ++n) {
    std::size_t count = tent_periodic_points(cfg.s, n).size();
    double estimate = std::log(static_cast<double>(count)) / n;
    csv.row(cfg.s, n, count, estimate, std::log(cfg.s));
    if (n == cfg.entropy_n) {
      session.manifest().set("entropy.estimate", estimate);
      session.say("n=" + std::to_string(n) + ": " + std::to_string(count) +
                  " fixed points, estimate " + format_double(estimate) +
                  " vs log s " + format_double(std::log(cfg.s)));
    }
  }
  session.write("entropy.csv", csv.str());
  return session.finish();
}

CommandResult cmd_verify(const ExperimentConfig& cfg) {
  validate(cfg, /*allow_missing_seed=*/true);
  Session session("verify", cfg);
  std::vector<CheckResult> results = run_checks(invariant_checks(), cfg.threads);
  std::vector<CheckResult> acceptance =
      run_checks(acceptance_checks(), cfg.threads);
  results.insert(results.end(), acceptance.begin(), acceptance.end());
  Csv csv({"id", "name", "passed", "advisory", "seconds", "detail"});
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    csv.row(r.id, r.name, r.passed, r.advisory, r.seconds, detail);
    session.say(format_check(r));
    if (r.passed) ++passed;
  }
  session.write("verify.csv", csv.str());
  session.manifest().set("verify.checks",
                         static_cast<std::uint64_t>(results.size()));
  session.manifest().set("verify.passed", static_cast<std::uint64_t>(passed));
  if (!suite_passed(results)) session.fail();
  return session.finish();
}

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "attractor", "tongues", "rotation", "continuity",
      "periodic",  "entropy", "verify"};
  return names;
}

CommandFn find_command(std::string_view name) {
  if (name == "attractor") return &cmd_attractor;
  if (name == "tongues") return &cmd_tongues;
  if (name == "rotation") return &cmd_rotation;
  if (name == "continuity") return &cmd_continuity;
  if (name == "periodic") return &cmd_periodic;
  if (name == "entropy") return &cmd_entropy;
  if (name == "verify") return &cmd_verify;
  return nullptr;
}

}  // namespace inlim::harness
