#ifndef INLIM_HARNESS_COMMANDS_H_
#define INLIM_HARNESS_COMMANDS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "inlim/harness/config.h"
#include "inlim/harness/output.h"

namespace inlim::harness {

struct CommandResult {
  std::filesystem::path out_dir;
  // Files written, manifest last.
  std::vector<std::string> files;
  RunManifest manifest;
  // False when a check performed by the command failed (verify).
  bool ok = true;
  // Human-readable lines for the terminal.
  std::vector<std::string> report;
};

// Each command validates the config, writes its outputs into cfg.out_dir
// and finishes with manifest.txt.
//   attractor   cloud.csv [cover.ppm]
//   tongues     tongues.ppm tongues.csv
//   rotation    interval.csv orbits.csv
//   continuity  continuity.csv
//   periodic    periodic.csv
//   entropy     entropy.csv
//   verify      verify.csv
CommandResult cmd_attractor(const ExperimentConfig& cfg);
CommandResult cmd_tongues(const ExperimentConfig& cfg);
CommandResult cmd_rotation(const ExperimentConfig& cfg);
CommandResult cmd_continuity(const ExperimentConfig& cfg);
CommandResult cmd_periodic(const ExperimentConfig& cfg);
CommandResult cmd_entropy(const ExperimentConfig& cfg);
// Ignores the experiment parameters; only out_dir and threads are used.
CommandResult cmd_verify(const ExperimentConfig& cfg);

using CommandFn = CommandResult (*)(const ExperimentConfig&);

const std::vector<std::string_view>& command_names();
// nullptr for an unknown name.
CommandFn find_command(std::string_view name);

}  // namespace inlim::harness

#endif  // INLIM_HARNESS_COMMANDS_H_
