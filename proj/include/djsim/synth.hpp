// Compilation of diagonal unitaries into RotZ + CNOT circuits.
//
// A diagonal unitary diag(e^{i phi_j}) on m qubits decomposes over parity
// characters as
//
//   phi(j) = global_phase + sum_S angle(S)/2 * chi_S(j),
//
// where S ranges over nonempty qubit subsets and chi_S(j) is +1 when the
// bits of j restricted to S have even parity, -1 otherwise. A parity chain
// of CNOTs onto one representative wire followed by RotZ(theta) applies the
// phase -theta/2 * chi_S(j), so the gate angle realizing subset S is
// theta_S = -angle(S). Subsets sharing a representative are sequenced in
// Gray-code order so adjacent chains cancel; the representative of S is its
// highest-index member.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "djsim/gates.hpp"
#include "djsim/oracle.hpp"

namespace djsim {

struct DiagonalSpec {
  int m = 0;
  std::vector<double> phases;  // length 2^m, radians, finite

  void validate() const;
};

DiagonalSpec diagonal_spec_of(const DiagonalGate& gate);
DiagonalSpec diagonal_spec_of(const ControlledDiagonalGate& gate, int m);

/// Key: subset bitmask with bit q set iff qubit q is in S (nonempty keys).
using AngleTable = std::map<std::uint32_t, double>;

struct WalshDecomposition {
  double global_phase = 0.0;
  AngleTable angles;
};

/// Character expansion of a phase vector (exact to rounding, via a fast
/// Walsh-Hadamard transform). Reconstruction with reconstruct_phases is
/// exact within 1e-12.
WalshDecomposition walsh_coefficients(const DiagonalSpec& spec);

/// Inverse pairing of walsh_coefficients.
std::vector<double> reconstruct_phases(const WalshDecomposition& w, int m);

struct SynthesisResult {
  Circuit circuit;      // RotZ/CNOT only; circuit.global_phase is set
  double global_phase = 0.0;
  AngleTable angles;    // the Walsh coefficients the circuit realizes
};

/// Compile a diagonal unitary. Zero-angle rotations and their chains are
/// elided; the CNOT count never exceeds 2^m.
SynthesisResult synthesize_diagonal(const DiagonalSpec& spec);

/// Max entrywise |circuit product * e^{i circuit.global_phase} -
/// diag(e^{i phases})|.
double verify_equivalence(const Circuit& circuit, const DiagonalSpec& spec);

/// The fifteen closed-form rotation angles theta_0..theta_14 of the
/// synthesized controlled oracle for a 3-bit function (control + 3 register
/// qubits), as signed Walsh sums of the truth table scaled by pi/8.
std::array<double, 15> collins_dqc1_angles(const OracleFunction& f);

/// Gate subset realized by each of the fifteen angles, as a qubit bitmask
/// on the 4-qubit register (control = qubit 0).
const std::array<std::uint32_t, 15>& collins_dqc1_subsets();

/// Reference 4-qubit circuit assembled from collins_dqc1_angles with plain
/// (unshared) parity chains; equivalent to the controlled oracle up to
/// global phase.
Circuit collins_dqc1_circuit(const OracleFunction& f);

/// Netlist text format: header "qubits m" and "gphase phi", then one gate
/// per line ("RZ q theta" with 17 significant digits, or "CNOT c t").
std::string emit_netlist(const Circuit& circuit);
Circuit parse_netlist(const std::string& text);

}  // namespace djsim
