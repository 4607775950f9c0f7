// Boolean oracle functions f:{0,1}^n -> {0,1}, their encoding as diagonal
// unitaries and the normalized-trace readout.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "djsim/gates.hpp"

namespace djsim {

enum class OracleClass { Constant0, Constant1, Balanced, Other };

std::string to_string(OracleClass c);

struct OracleFunction {
  int n = 0;                        // input bits
  std::vector<uint8_t> truth_table; // length 2^n, entries 0/1
  OracleClass cls = OracleClass::Other;

  bool is_constant() const {
    return cls == OracleClass::Constant0 || cls == OracleClass::Constant1;
  }
  bool is_balanced() const { return cls == OracleClass::Balanced; }
};

/// Build an OracleFunction from a truth table, assigning the class tag.
/// The table length must be a power of two.
OracleFunction classify(const std::vector<uint8_t>& truth_table);

/// Uniformly random balanced function on n bits; deterministic given seed.
OracleFunction random_balanced(int n, std::uint64_t seed);

/// The oracle unitary sum_j (-1)^{f(j)} |j><j| as a diagonal gate
/// (phase pi where f(j)=1).
DiagonalGate oracle_unitary(const OracleFunction& f);

/// Controlled version on n+1 qubits, control on wire 0.
ControlledDiagonalGate controlled_oracle_unitary(const OracleFunction& f);

/// 2^{-n} sum_j (-1)^{f(j)}: +1 for Constant0, -1 for Constant1,
/// 0 for Balanced; exact (a dyadic rational).
double normalized_trace(const OracleFunction& f);

/// Truth-table text format: one line of '0'/'1' of power-of-two length.
OracleFunction parse_truth_table(const std::string& text);
std::string format_truth_table(const OracleFunction& f);
OracleFunction load_oracle_file(const std::string& path);

}  // namespace djsim
