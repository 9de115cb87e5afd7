#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <filesystem>
#include <string>
#include <unistd.h>

#include "inlim/harness/commands.h"
#include "inlim/harness/config.h"
#include "inlim/harness/output.h"
#include "inlim/harness/verify.h"

using namespace inlim;
using namespace inlim::harness;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("inlim_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string error_of(std::string_view text) {
  try {
    validate(parse_config(text));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string value_of(const RunManifest& m, std::string_view key) {
  for (const auto& [k, v] : m.entries()) {
    if (k == key) return v;
  }
  return "";
}

ExperimentConfig small_config(const fs::path& dir) {
  ExperimentConfig c;
  c.seed = 7;
  c.out_dir = dir.string();
  c.seeds = 10;
  c.transient = 100;
  c.keep = 10;
  return c;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("checksums") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
  CHECK(hex64(1) == "0000000000000001");
}

TEST_CASE("csv") {
  Csv csv({"a", "b", "c", "d"});
  csv.row(1, 0.5, true, "x");
  csv.row(std::size_t{2}, 1.0 / 3.0, false, std::string("y"));
  CHECK(csv.rows() == 2);
  CHECK(csv.str() == "a,b,c,d\n1,0.5,1,x\n2,0.33333333333333331,0,y\n");
  CHECK_THROWS_AS(csv.row(1, 2), std::invalid_argument);
  CsvTable t = parse_csv(csv.str());
  CHECK(t.header.size() == 4);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::stod(t.rows[1][1]) == 1.0 / 3.0);
  CHECK_THROWS(parse_csv("a,b\n1\n"));
  CHECK_THROWS(parse_csv(""));
}

TEST_CASE("p6 pixmap") {
  std::string img = p6_pixmap(3, 2, [](int row, int col) { return row == 0 && col == 2; });
  std::string header = "P6\n3 2\n255\n";
  REQUIRE(img.size() == header.size() + 18);
  CHECK(img.substr(0, header.size()) == header);
  CHECK(img[header.size() + 6] == '\0');
  CHECK(img[header.size() + 0] == '\xff');
  CHECK(img[header.size() + 9] == '\xff');
  CHECK_THROWS_AS(p6_pixmap(0, 2, [](int, int) { return false; }), std::invalid_argument);
}

TEST_CASE("atomic writes") {
  TempDir dir;
  fs::path p = dir.path / "f.txt";
  write_atomic(p, "one");
  write_atomic(p, "two");
  CHECK(read_file(p) == "two");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  CHECK(files == 1);
  CHECK_THROWS(write_atomic(dir.path / "missing" / "f.txt", "x"));
}

TEST_CASE("manifest") {
  RunManifest m;
  m.set("a", std::string("1"));
  m.set("b", 0.5);
  m.set("a", std::string("2"));
  m.add_file("x.csv", "hello");
  auto kv = parse_key_values(m.str());
  REQUIRE(kv.size() == 4);
  CHECK(kv[0] == std::pair<std::string, std::string>{"a", "2"});
  CHECK(kv[2].first == "file.x.csv.bytes");
  CHECK(kv[2].second == "5");
  CHECK(kv[3].second == hex64(fnv1a64("hello")));
  CHECK_THROWS(parse_key_values("novalue\n"));
}

TEST_CASE("config round trip") {
  ExperimentConfig c;
  c.name = "sweep";
  c.kind = FamilyKind::kStandard;
  c.b = 2.5;
  c.omega = 1.0 / 3.0;
  c.seed = 18446744073709551615ULL;
  c.threads = 3;
  ExperimentConfig back = parse_config(serialize_config(c));
  CHECK(back == c);
  std::string text = serialize_config(ExperimentConfig{});
  CHECK(text.find("rng.seed") == std::string::npos);
  for (auto key : config_keys()) {
    if (key != "rng.seed") CHECK(text.find(std::string(key) + "=") != std::string::npos);
  }
  ExperimentConfig parsed = parse_config("# comment\nfamily.kind = quadratic  # trailing\n\nfamily.a=1.5\n");
  CHECK(parsed.kind == FamilyKind::kQuadratic);
  CHECK(parsed.a == 1.5);
  CHECK(config_family(parsed) == Family::quadratic(1.5));
  CHECK(config_family_at(parsed, 1.2) == Family::quadratic(1.2));
}

TEST_CASE("config errors name the key") {
  CHECK(error_of("family.s=2.5\nrng.seed=1\n").find("family.s") == 0);
  CHECK(error_of("cloud.transient=50\nrng.seed=1\n").find("cloud.transient") == 0);
  CHECK(error_of("fattening.delta=0\nrng.seed=1\n").find("fattening.delta") == 0);
  CHECK(error_of("family.kind=logistic\n").find("family.kind") == 0);
  CHECK(error_of("cloud.seeds=ten\n").find("cloud.seeds") == 0);
  CHECK(error_of("rng.seed=-3\n").find("rng.seed") == 0);
  CHECK(error_of("family.s=1.5\n").find("rng.seed") == 0);
  CHECK(error_of("bogus.key=1\n").find("unknown key 'bogus.key'") != std::string::npos);
  CHECK(error_of("family.s=1\nfamily.s=2\n").find("duplicate") != std::string::npos);
  CHECK(error_of("just text\n").find("line 1") == 0);
  CHECK(error_of("output.dir=\nrng.seed=1\n").find("output.dir") == 0);
  CHECK(error_of("family.s=1.5\nrng.seed=1\n").empty());
  CHECK_NOTHROW(validate(parse_config(""), true));
  CHECK_THROWS_AS(load_config("/nonexistent/inlim.cfg"), ConfigError);
}

TEST_CASE("config helpers") {
  ExperimentConfig c;
  c.t_start = 1.0;
  c.t_stop = 1.7;
  c.t_step = 0.01;
  auto grid = config_grid(c);
  CHECK(grid.size() == 71);
  CHECK(grid.back() == doctest::Approx(1.7));
  c.kind = FamilyKind::kStandard;
  CHECK(config_model(c) == ManifoldModel::annulus());
  CloudSettings cs = config_cloud(c);
  CHECK(cs.seeds == c.seeds);
  CHECK(cs.keep == c.keep);
}

TEST_CASE("command registry") {
  CHECK(command_names().size() == 7);
  for (auto name : command_names()) CHECK(find_command(name) != nullptr);
  CHECK(find_command("nope") == nullptr);
}

TEST_CASE("attractor command") {
  TempDir dir;
  ExperimentConfig c = small_config(dir.path);
  c.s = 0.5;
  c.transient = 1000;
  c.cover_resolution = 64;
  CommandResult r = cmd_attractor(c);
  CHECK(r.ok);
  REQUIRE(r.files.size() == 3);
  CHECK(r.files.back() == "manifest.txt");
  CsvTable t = parse_csv(read_file(dir.path / "cloud.csv"));
  CHECK(t.header == std::vector<std::string>{"seed_index", "iter", "x_or_theta", "y_or_r"});
  CHECK(t.rows.size() == 100);
  double xmin = 1, xmax = 0, ymin = 1, ymax = -1;
  for (const auto& row : t.rows) {
    xmin = std::min(xmin, std::stod(row[2]));
    xmax = std::max(xmax, std::stod(row[2]));
    ymin = std::min(ymin, std::stod(row[3]));
    ymax = std::max(ymax, std::stod(row[3]));
  }
  CHECK(std::hypot(xmax - xmin, ymax - ymin) < 1e-3);
  std::string ppm = read_file(dir.path / "cover.ppm");
  CHECK(ppm.rfind("P6\n64 64\n255\n", 0) == 0);

  std::string manifest = read_file(dir.path / "manifest.txt");
  auto kv = parse_key_values(manifest);
  CHECK(value_of(r.manifest, "command") == "attractor");
  CHECK(value_of(r.manifest, "file.cloud.csv.fnv1a64") ==
        hex64(fnv1a64(read_file(dir.path / "cloud.csv"))));
  CHECK(value_of(r.manifest, "config.rng.seed") == "7");

  // Same seed, same bytes.
  std::string first = read_file(dir.path / "cloud.csv");
  c.threads = 2;
  cmd_attractor(c);
  CHECK(read_file(dir.path / "cloud.csv") == first);
}

TEST_CASE("tongues command") {
  TempDir dir;
  ExperimentConfig c = small_config(dir.path);
  c.kind = FamilyKind::kStandard;
  c.tongue_r = 0.5;
  c.tongue_res_b = 6;
  c.tongue_res_omega = 9;
  c.tongue_n = 500;
  c.grid_res = 256;
  CommandResult r = cmd_tongues(c);
  CHECK(r.ok);
  std::string ppm = read_file(dir.path / "tongues.ppm");
  CHECK(ppm.rfind("P6\n9 6\n255\n", 0) == 0);
  CHECK(ppm.size() == std::string("P6\n9 6\n255\n").size() + 9 * 6 * 3);
  CsvTable t = parse_csv(read_file(dir.path / "tongues.csv"));
  CHECK(t.rows.size() == 54);
  CHECK(t.header.back() == "member");
}

TEST_CASE("rotation command") {
  TempDir dir;
  ExperimentConfig c = small_config(dir.path);
  c.kind = FamilyKind::kStandard;
  c.b = 0.0;
  c.omega = 0.3;
  c.rotation_n = 2000;
  c.rotation_seeds = 5;
  c.grid_res = 256;
  CommandResult r = cmd_rotation(c);
  CHECK(r.ok);
  CsvTable iv = parse_csv(read_file(dir.path / "interval.csv"));
  REQUIRE(iv.rows.size() == 1);
  CHECK(std::stod(iv.rows[0][2]) == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(std::stod(iv.rows[0][3]) == doctest::Approx(0.3).epsilon(1e-9));
  CsvTable orbits = parse_csv(read_file(dir.path / "orbits.csv"));
  CHECK(orbits.rows.size() == 5);

  c.kind = FamilyKind::kTent;
  CHECK_THROWS_AS(cmd_rotation(c), ConfigError);
}

TEST_CASE("continuity command") {
  TempDir dir;
  ExperimentConfig c = small_config(dir.path);
  c.t_start = 1.2;
  c.t_stop = 1.9;
  c.t_step = 0.01;
  CommandResult r = cmd_continuity(c);
  CsvTable t = parse_csv(read_file(dir.path / "continuity.csv"));
  CHECK(t.rows.size() == 70);
  CHECK(t.header == std::vector<std::string>{"t", "t_next", "hausdorff", "stabilization_t",
                                             "stabilization_next"});
  CHECK(t.rows[0][3] == "1");

  c.t_start = 0.5;
  c.t_stop = 0.6;
  c.t_step = 0.1;
  cmd_continuity(c);
  CsvTable shrink = parse_csv(read_file(dir.path / "continuity.csv"));
  REQUIRE(shrink.rows.size() == 1);
  CHECK(shrink.rows[0][3] == "none");
}

TEST_CASE("periodic and entropy commands") {
  TempDir dir;
  ExperimentConfig c = small_config(dir.path);
  c.s = 2.0;
  c.max_period = 4;
  c.delta = 0.05;
  c.eps = 0.05;
  CommandResult r = cmd_periodic(c);
  CHECK(r.ok);
  CsvTable t = parse_csv(read_file(dir.path / "periodic.csv"));
  CHECK(t.rows.size() == 2 + 4 + 8 + 16);

  c.entropy_n = 10;
  CommandResult e = cmd_entropy(c);
  CsvTable et = parse_csv(read_file(dir.path / "entropy.csv"));
  CHECK(et.rows.size() == 7);
  for (const auto& row : et.rows) {
    CHECK(std::stod(row[3]) == doctest::Approx(std::log(2.0)));
  }

  c.s = 0.9;
  CHECK_THROWS_AS(cmd_periodic(c), ConfigError);
  c.kind = FamilyKind::kQuadratic;
  CHECK_THROWS_AS(cmd_entropy(c), ConfigError);
}

TEST_CASE("invariant suite") {
  for (const CheckResult& r : run_checks(invariant_checks(), 1)) {
    INFO(format_check(r));
    CHECK(r.passed);
  }
}
