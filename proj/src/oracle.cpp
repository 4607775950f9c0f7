#include "djsim/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "djsim/rng.hpp"

namespace djsim {

std::string to_string(OracleClass c) {
  switch (c) {
    case OracleClass::Constant0: return "constant0";
    case OracleClass::Constant1: return "constant1";
    case OracleClass::Balanced: return "balanced";
    case OracleClass::Other: return "other";
  }
  return "other";
}

OracleFunction classify(const std::vector<uint8_t>& truth_table) {
  const std::size_t len = truth_table.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("classify: truth table length must be a power of two");
  }
  int n = 0;
  while ((std::size_t(1) << n) < len) ++n;

  std::size_t ones = 0;
  for (uint8_t b : truth_table) {
    if (b > 1) throw std::invalid_argument("classify: truth table entries must be 0 or 1");
    ones += b;
  }

  OracleFunction f;
  f.n = n;
  f.truth_table = truth_table;
  if (ones == 0) {
    f.cls = OracleClass::Constant0;
  } else if (ones == len) {
    f.cls = OracleClass::Constant1;
  } else if (2 * ones == len) {
    f.cls = OracleClass::Balanced;
  } else {
    f.cls = OracleClass::Other;
  }
  return f;
}

OracleFunction random_balanced(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_balanced: n must be >= 1");
  const std::size_t len = std::size_t(1) << n;
  std::vector<uint8_t> table(len, 0);
  std::fill(table.begin(), table.begin() + len / 2, uint8_t(1));
  Rng rng(seed);
  rng.shuffle(table);
  return classify(table);
}

DiagonalGate oracle_unitary(const OracleFunction& f) {
  DiagonalGate gate;
  gate.phases.resize(f.truth_table.size());
  for (std::size_t j = 0; j < f.truth_table.size(); ++j) {
    gate.phases[j] = f.truth_table[j] ? kPi : 0.0;
  }
  return gate;
}

ControlledDiagonalGate controlled_oracle_unitary(const OracleFunction& f) {
  ControlledDiagonalGate gate;
  gate.control = 0;
  gate.phases = oracle_unitary(f).phases;
  return gate;
}

double normalized_trace(const OracleFunction& f) {
  long long sum = 0;
  for (uint8_t b : f.truth_table) sum += b ? -1 : 1;
  return double(sum) / double(f.truth_table.size());
}

OracleFunction parse_truth_table(const std::string& text) {
  std::string line = text;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.pop_back();
  }
  if (line.empty()) throw std::invalid_argument("truth table: empty input");
  std::vector<uint8_t> table;
  table.reserve(line.size());
  for (char c : line) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("truth table: characters must be '0' or '1'");
    }
    table.push_back(c == '1' ? 1 : 0);
  }
  return classify(table);
}

std::string format_truth_table(const OracleFunction& f) {
  std::string out;
  out.reserve(f.truth_table.size());
  for (uint8_t b : f.truth_table) out.push_back(b ? '1' : '0');
  return out;
}

OracleFunction load_oracle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open oracle file: " + path);
  std::string line;
  std::getline(in, line);
  return parse_truth_table(line);
}

}  // namespace djsim
