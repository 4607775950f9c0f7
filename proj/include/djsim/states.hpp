// Simulation state representations: pure state vectors, density matrices
// and bipartitions of the qubit register.
//
// Index convention used everywhere: qubit 0 is the topmost wire and maps to
// the most significant bit of a computational basis index.

#pragma once

#include <vector>

#include "djsim/linalg.hpp"

namespace djsim {

/// Normalized pure state on m qubits.
class PureState {
 public:
  /// |0...0> on m qubits.
  explicit PureState(int m);

  /// From explicit amplitudes; length must be 2^m, norm 1 within 1e-12.
  PureState(int m, Vector amplitudes);

  /// Computational basis state |index>.
  static PureState basis(int m, std::uint64_t index);

  /// |+>^m, the uniform superposition.
  static PureState plus(int m);

  int qubits() const { return m_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

  /// Projector |psi><psi|.
  Matrix projector() const;

 private:
  int m_;
  Vector amplitudes_;
};

/// Density matrix on m qubits: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// From an explicit matrix; invariants checked (Hermitian within 1e-12,
  /// trace 1 within 1e-12, min eigenvalue >= -1e-10).
  DensityMatrix(int m, Matrix rho);

  static DensityMatrix from_pure(const PureState& psi);

  /// Maximally mixed state I/2^m.
  static DensityMatrix maximally_mixed(int m);

  int qubits() const { return m_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  int m_;
  Matrix matrix_;
};

/// A bipartition of {0..m-1} given by a nonempty proper subset side_a;
/// side_b is the complement.
class Bipartition {
 public:
  Bipartition(int m, std::vector<int> side_a);

  /// Convenience: side_a = {qubit}.
  static Bipartition single(int m, int qubit);

  /// Convenience: side_a = {0..count-1} (the top wires).
  static Bipartition top(int m, int count);

  int qubits() const { return m_; }
  const std::vector<int>& side_a() const { return side_a_; }
  std::vector<int> side_b() const;
  int size_a() const { return static_cast<int>(side_a_.size()); }
  int size_b() const { return m_ - size_a(); }
  bool in_a(int qubit) const;

 private:
  int m_;
  std::vector<int> side_a_;  // sorted, validated
};

}  // namespace djsim
