#include "djsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace djsim {

namespace {

constexpr int kMaxQubits = 24;  // hard sanity cap; configured limits are lower

void check_qubit_count(int m) {
  if (m < 1 || m > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
}

}  // namespace

PureState::PureState(int m) : m_(m), amplitudes_() {
  check_qubit_count(m);
  amplitudes_ = Vector::Zero(Eigen::Index(1) << m);
  amplitudes_[0] = 1.0;
}

PureState::PureState(int m, Vector amplitudes) : m_(m), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(m);
  if (amplitudes_.size() != (Eigen::Index(1) << m)) {
    throw std::invalid_argument("PureState: amplitude vector has wrong length");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

PureState PureState::basis(int m, std::uint64_t index) {
  check_qubit_count(m);
  if (index >= (std::uint64_t(1) << m)) {
    throw std::out_of_range("PureState::basis: index out of range");
  }
  Vector amps = Vector::Zero(Eigen::Index(1) << m);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(m, std::move(amps));
}

PureState PureState::plus(int m) {
  check_qubit_count(m);
  const Eigen::Index dim = Eigen::Index(1) << m;
  Vector amps = Vector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  return PureState(m, std::move(amps));
}

Matrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(int m, Matrix rho) : m_(m), matrix_(std::move(rho)) {
  check_qubit_count(m);
  const Eigen::Index dim = Eigen::Index(1) << m;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: matrix has wrong dimension");
  }
  if (!is_hermitian(matrix_, 1e-12)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > 1e-12 || std::abs(matrix_.trace().imag()) > 1e-12) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  if (hermitian_eigenvalues(matrix_, 1e-10).minCoeff() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.qubits(), psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int m) {
  check_qubit_count(m);
  const Eigen::Index dim = Eigen::Index(1) << m;
  return DensityMatrix(m, Matrix::Identity(dim, dim) / double(dim));
}

Bipartition::Bipartition(int m, std::vector<int> side_a) : m_(m), side_a_(std::move(side_a)) {
  check_qubit_count(m);
  std::sort(side_a_.begin(), side_a_.end());
  side_a_.erase(std::unique(side_a_.begin(), side_a_.end()), side_a_.end());
  if (side_a_.empty()) {
    throw std::invalid_argument("Bipartition: side_a must be nonempty");
  }
  if (static_cast<int>(side_a_.size()) >= m_) {
    throw std::invalid_argument("Bipartition: side_a must be a proper subset");
  }
  if (side_a_.front() < 0 || side_a_.back() >= m_) {
    throw std::out_of_range("Bipartition: qubit index out of range");
  }
}

Bipartition Bipartition::single(int m, int qubit) {
  return Bipartition(m, {qubit});
}

Bipartition Bipartition::top(int m, int count) {
  std::vector<int> a(count);
  for (int i = 0; i < count; ++i) a[i] = i;
  return Bipartition(m, std::move(a));
}

std::vector<int> Bipartition::side_b() const {
  std::vector<int> b;
  b.reserve(size_b());
  for (int q = 0; q < m_; ++q) {
    if (!in_a(q)) b.push_back(q);
  }
  return b;
}

bool Bipartition::in_a(int qubit) const {
  return std::binary_search(side_a_.begin(), side_a_.end(), qubit);
}

}  // namespace djsim
