// Gate application, partial trace/transpose and observable expectations.

#pragma once

#include "djsim/gates.hpp"
#include "djsim/states.hpp"

namespace djsim {

/// rho -> U rho U^dagger. The gate matrix is built by explicit tensor
/// construction (registers are small).
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);

/// |psi> -> U|psi>. Hadamard/RotZ/CNOT/diagonal gates act in place on the
/// amplitude vector; the result always matches gate_matrix() applied as a
/// matrix-vector product.
PureState apply_gate(const PureState& psi, const Gate& gate);

DensityMatrix apply_circuit(const DensityMatrix& rho, const Circuit& c);
PureState apply_circuit(const PureState& psi, const Circuit& c);

/// Reduced state on keep.side_a() (wire order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& keep);

/// Transpose of the side_a indices. The result is Hermitian with unit trace
/// but in general not positive semidefinite, so it is returned as a plain
/// matrix. The matrix overload exists because the operation is an
/// involution whose intermediate value may not be a valid state.
Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& part);
Matrix partial_transpose(const Matrix& rho, const Bipartition& part);

/// Tr(rho * O) for a Hermitian observable acting on the listed qubits
/// (most significant first). Throws if O is not Hermitian within 1e-12 or
/// if the trace has imaginary part above 1e-10.
double expectation(const DensityMatrix& rho, const Matrix& observable,
                   const std::vector<int>& qubits);

/// The (n+1)-qubit one-clean-qubit initial state
///   2^{-(n+1)} (I + alpha Z) (x) I^{(x)n},
/// qubit 0 the control with polarization alpha in [0,1].
DensityMatrix dqc1_initial_state(int n, double alpha);

}  // namespace djsim
