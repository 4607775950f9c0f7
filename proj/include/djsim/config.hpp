// Run configuration shared by the command-line tools.

#pragma once

#include <cstdint>
#include <string>

namespace djsim {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::uint64_t seed = 1;
  struct {
    double discord_zero = 1e-8;
    double classical_residual = 1e-8;
    double matrix_eq = 1e-10;
  } thresholds;
  struct {
    int max_qubits_pure = 12;
    int max_qubits_mixed = 8;
  } limits;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty = stdout

  /// Throws std::invalid_argument when a threshold or limit is out of range.
  void validate() const;
};

/// Parse a key=value config file ('#' starts a comment). Unknown keys are
/// rejected. Keys: seed, discord_zero, classical_residual, matrix_eq,
/// max_qubits_pure, max_qubits_mixed, format, out.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Config file named by the DJSIM_CONFIG environment variable, if set;
/// `base` otherwise.
RunConfig config_from_environment(RunConfig base = {});

}  // namespace djsim
