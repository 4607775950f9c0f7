// Elementary gates and gate programs.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "djsim/linalg.hpp"

namespace djsim {

struct HadamardGate {
  int qubit;
};

/// z rotation diag(e^{-i theta/2}, e^{+i theta/2}) on one qubit.
struct RotZGate {
  int qubit;
  double theta;
};

struct CnotGate {
  int control;
  int target;
};

/// Diagonal unitary over the full register: entry j is e^{i phases[j]}.
struct DiagonalGate {
  std::vector<double> phases;
};

/// Identity on the control=0 block, diag(e^{i phases}) over the remaining
/// qubits (in ascending wire order) on the control=1 block.
struct ControlledDiagonalGate {
  int control;
  std::vector<double> phases;
};

/// Arbitrary unitary acting on the listed qubits (most significant first).
struct CustomUnitaryGate {
  Matrix matrix;
  std::vector<int> qubits;
};

using Gate = std::variant<HadamardGate, RotZGate, CnotGate, DiagonalGate,
                          ControlledDiagonalGate, CustomUnitaryGate>;

/// Full 2^m x 2^m matrix of a gate embedded in an m-qubit register.
/// Validates qubit indices and (for CustomUnitary) unitarity within 1e-12.
Matrix gate_matrix(const Gate& gate, int m);

/// Short human-readable form, e.g. "H 0", "RZ 3 0.785...", "CNOT 0 3".
std::string gate_description(const Gate& gate);

bool is_cnot(const Gate& gate);

/// Inverse of a single gate.
Gate inverse(const Gate& gate);

/// An ordered gate program on m qubits with an explicit global phase,
/// representing e^{i global_phase} * (product of gates, first gate applied
/// first).
struct Circuit {
  int m = 0;
  std::vector<Gate> gates;
  double global_phase = 0.0;

  /// Validates every gate's indices against m (CNOT control != target).
  void validate() const;

  /// Full unitary including the global phase factor.
  Matrix unitary() const;

  int count_cnots() const;
  int count_rotations() const;
};

/// Reversed-inverse circuit: applying `c` then `inverse_circuit(c)` is the
/// identity (global phases cancel).
Circuit inverse_circuit(const Circuit& c);

}  // namespace djsim
