#include "djsim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace djsim {

void RunConfig::validate() const {
  if (thresholds.discord_zero <= 0 || thresholds.classical_residual <= 0 ||
      thresholds.matrix_eq <= 0) {
    throw std::invalid_argument("config: thresholds must be positive");
  }
  if (limits.max_qubits_pure < 1 || limits.max_qubits_mixed < 1) {
    throw std::invalid_argument("config: qubit limits must be >= 1");
  }
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    static const char* known[] = {"seed",           "discord_zero",    "classical_residual",
                                  "matrix_eq",      "max_qubits_pure", "max_qubits_mixed",
                                  "format",         "out"};
    bool recognized = false;
    for (const char* k : known) recognized = recognized || key == k;
    if (!recognized) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
    }
    try {
      if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "discord_zero") {
        base.thresholds.discord_zero = std::stod(value);
      } else if (key == "classical_residual") {
        base.thresholds.classical_residual = std::stod(value);
      } else if (key == "matrix_eq") {
        base.thresholds.matrix_eq = std::stod(value);
      } else if (key == "max_qubits_pure") {
        base.limits.max_qubits_pure = std::stoi(value);
      } else if (key == "max_qubits_mixed") {
        base.limits.max_qubits_mixed = std::stoi(value);
      } else if (key == "format") {
        if (value == "csv") {
          base.format = OutputFormat::Csv;
        } else if (value == "json") {
          base.format = OutputFormat::Json;
        } else {
          throw std::invalid_argument("format must be csv or json");
        }
      } else if (key == "out") {
        base.output_path = value;
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad value for '" +
                                  key + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": value out of range");
    }
  }
  base.validate();
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

RunConfig config_from_environment(RunConfig base) {
  const char* path = std::getenv("DJSIM_CONFIG");
  if (path && *path) return load_config_file(path, base);
  return base;
}

}  // namespace djsim
