// Command line front end: one subcommand per experiment.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "inlim/harness/commands.h"
#include "inlim/harness/config.h"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
};

void add_common(CLI::App& sub, CommonFlags& flags) {
  sub.add_option("--config", flags.config, "key=value experiment file")
      ->check(CLI::ExistingFile);
  sub.add_option("--out", flags.out, "output directory (overrides output.dir)");
  sub.add_option("--seed", flags.seed, "rng seed (overrides rng.seed)");
  sub.add_option("--threads", flags.threads,
                 "worker threads, 0 = all cores (overrides run.threads)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace inlim::harness;
  CLI::App app{"inlim: attractors of fattened interval and circle maps"};
  app.set_version_flag("--version", std::string("inlim ") + INLIM_VERSION);
  app.require_subcommand(1);

  CommonFlags flags;
  const char* help[] = {
      "sample an attractor cloud (and optional box cover)",
      "rasterize an Arnold tongue",
      "rotation interval and orbit rotation numbers on the annulus",
      "Hausdorff distances along a parameter grid",
      "match tent periodic points with fixed points of the disk map",
      "periodic-point entropy estimates for the tent family",
      "run the invariant suite and acceptance criteria"};
  std::size_t i = 0;
  for (std::string_view name : command_names()) {
    add_common(*app.add_subcommand(std::string(name), help[i++]), flags);
  }
  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    ExperimentConfig cfg;
    if (!flags.config.empty()) cfg = load_config(flags.config);
    if (!flags.out.empty()) cfg.out_dir = flags.out;
    if (flags.seed) cfg.seed = flags.seed;
    if (flags.threads) cfg.threads = *flags.threads;
    CommandResult result = find_command(name)(cfg);
    for (const std::string& line : result.report) std::cout << line << "\n";
    std::cout << "wrote";
    for (const std::string& f : result.files) std::cout << " " << f;
    std::cout << " to " << result.out_dir.string() << "\n";
    return result.ok ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << name << " failed: " << e.what() << "\n";
    return 1;
  }
}
