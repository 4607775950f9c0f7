// Dense complex linear algebra helpers shared by all modules.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace djsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

constexpr double kPi = 3.14159265358979323846;

/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Identity on `qubits` qubits (dimension 2^qubits).
Matrix identity_matrix(int qubits);

bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

/// Max entrywise absolute difference.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Eigendecomposition of a Hermitian matrix: real eigenvalues ascending,
/// columns of `vectors` the matching orthonormal eigenvectors.
/// Throws std::invalid_argument if the input is not Hermitian within `tol`.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix& m, double tol = 1e-10);

/// Eigenvalues only (ascending) of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m, double tol = 1e-10);

/// Embed an operator acting on the listed qubits into the full m-qubit
/// register. Qubit 0 is the most significant bit of a basis index; `qubits`
/// gives the wires the operator's own bits map to, most significant first.
Matrix embed_operator(const Matrix& op, const std::vector<int>& qubits, int m);

/// Max entrywise deviation between two matrices after aligning a global
/// phase, i.e. min over φ of max|a − e^{iφ}b| (φ fixed from the largest
/// entry of b).
double deviation_up_to_global_phase(const Matrix& a, const Matrix& b);

}  // namespace djsim
