#include "djsim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace djsim {

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix identity_matrix(int qubits) {
  const Eigen::Index dim = Eigen::Index(1) << qubits;
  return Matrix::Identity(dim, dim);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix prod = m.adjoint() * m;
  return max_abs_diff(prod, Matrix::Identity(m.rows(), m.cols())) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  return solver.eigenvalues();
}

Matrix embed_operator(const Matrix& op, const std::vector<int>& qubits, int m) {
  const int s = static_cast<int>(qubits.size());
  const Eigen::Index sub_dim = Eigen::Index(1) << s;
  const Eigen::Index dim = Eigen::Index(1) << m;
  if (op.rows() != sub_dim || op.cols() != sub_dim) {
    throw std::invalid_argument("embed_operator: operator size does not match qubit count");
  }
  for (int q : qubits) {
    if (q < 0 || q >= m) throw std::out_of_range("embed_operator: qubit index out of range");
  }

  // sub-index of a full basis index: bit k of the sub-index is the bit of
  // qubit qubits[k] (qubit 0 = most significant bit of the full index).
  auto sub_index = [&](Eigen::Index j) {
    Eigen::Index idx = 0;
    for (int k = 0; k < s; ++k) {
      const int bit = static_cast<int>((j >> (m - 1 - qubits[k])) & 1);
      idx |= Eigen::Index(bit) << (s - 1 - k);
    }
    return idx;
  };
  // Mask of the untouched bits; rows/cols only connect when these agree.
  Eigen::Index rest_mask = dim - 1;
  for (int q : qubits) rest_mask &= ~(Eigen::Index(1) << (m - 1 - q));

  Matrix full = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const Eigen::Index rest = a & rest_mask;
    const Eigen::Index sa = sub_index(a);
    for (Eigen::Index sb = 0; sb < sub_dim; ++sb) {
      // Rebuild the column index with the same untouched bits.
      Eigen::Index b = rest;
      for (int k = 0; k < s; ++k) {
        const Eigen::Index bit = (sb >> (s - 1 - k)) & 1;
        b |= bit << (m - 1 - qubits[k]);
      }
      full(a, b) = op(sa, sb);
    }
  }
  return full;
}

double deviation_up_to_global_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("deviation_up_to_global_phase: size mismatch");
  }
  // Phase fixed from b's largest entry; for unitaries every entry of b that
  // is comfortably nonzero pins the same phase.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  const Complex phase = a(r, c) / b(r, c);
  const double mag = std::abs(phase);
  if (mag == 0.0) return max_abs_diff(a, b);
  return max_abs_diff(a, (phase / mag) * b);
}

}  // namespace djsim
