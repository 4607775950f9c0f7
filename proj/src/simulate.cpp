#include "djsim/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace djsim {

namespace {

// In-place fast paths for pure states; each mirrors gate_matrix() exactly
// (property-tested against it).

void apply_single_qubit(Vector& amps, int m, int q, const Matrix& u) {
  const Eigen::Index bit = Eigen::Index(1) << (m - 1 - q);
  const Eigen::Index dim = amps.size();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j & bit) continue;
    const Complex a0 = amps[j];
    const Complex a1 = amps[j | bit];
    amps[j] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[j | bit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_cnot(Vector& amps, int m, int control, int target) {
  const Eigen::Index cbit = Eigen::Index(1) << (m - 1 - control);
  const Eigen::Index tbit = Eigen::Index(1) << (m - 1 - target);
  const Eigen::Index dim = amps.size();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if ((j & cbit) && !(j & tbit)) {
      std::swap(amps[j], amps[j | tbit]);
    }
  }
}

}  // namespace

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  const Matrix u = gate_matrix(gate, rho.qubits());
  return DensityMatrix(rho.qubits(), u * rho.matrix() * u.adjoint());
}

PureState apply_gate(const PureState& psi, const Gate& gate) {
  const int m = psi.qubits();
  Vector amps = psi.amplitudes();
  if (const auto* h = std::get_if<HadamardGate>(&gate)) {
    Matrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u << s, s, s, -s;
    if (h->qubit < 0 || h->qubit >= m) throw std::out_of_range("Hadamard: qubit index out of range");
    apply_single_qubit(amps, m, h->qubit, u);
  } else if (const auto* r = std::get_if<RotZGate>(&gate)) {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -r->theta / 2.0);
    u(1, 1) = std::polar(1.0, r->theta / 2.0);
    if (r->qubit < 0 || r->qubit >= m) throw std::out_of_range("RotZ: qubit index out of range");
    apply_single_qubit(amps, m, r->qubit, u);
  } else if (const auto* cx = std::get_if<CnotGate>(&gate)) {
    if (cx->control < 0 || cx->control >= m || cx->target < 0 || cx->target >= m) {
      throw std::out_of_range("CNOT: qubit index out of range");
    }
    if (cx->control == cx->target) throw std::invalid_argument("CNOT: control equals target");
    apply_cnot(amps, m, cx->control, cx->target);
  } else if (const auto* d = std::get_if<DiagonalGate>(&gate)) {
    if (static_cast<Eigen::Index>(d->phases.size()) != amps.size()) {
      throw std::invalid_argument("Diagonal: phase vector length mismatch");
    }
    for (Eigen::Index j = 0; j < amps.size(); ++j) {
      amps[j] *= std::polar(1.0, d->phases[j]);
    }
  } else if (const auto* cd = std::get_if<ControlledDiagonalGate>(&gate)) {
    if (cd->control < 0 || cd->control >= m) {
      throw std::out_of_range("ControlledDiagonal: control index out of range");
    }
    if (static_cast<Eigen::Index>(cd->phases.size()) != amps.size() / 2) {
      throw std::invalid_argument("ControlledDiagonal: phase vector length mismatch");
    }
    const Eigen::Index cbit = Eigen::Index(1) << (m - 1 - cd->control);
    for (Eigen::Index j = 0; j < amps.size(); ++j) {
      if (j & cbit) {
        const Eigen::Index low = j & (cbit - 1);
        const Eigen::Index high = (j >> 1) & ~(cbit - 1);
        amps[j] *= std::polar(1.0, cd->phases[high | low]);
      }
    }
  } else {
    amps = gate_matrix(gate, m) * amps;
  }
  return PureState(m, std::move(amps));
}

DensityMatrix apply_circuit(const DensityMatrix& rho, const Circuit& c) {
  if (c.m != rho.qubits()) throw std::invalid_argument("apply_circuit: qubit count mismatch");
  DensityMatrix out = rho;
  for (const Gate& g : c.gates) out = apply_gate(out, g);
  return out;
}

PureState apply_circuit(const PureState& psi, const Circuit& c) {
  if (c.m != psi.qubits()) throw std::invalid_argument("apply_circuit: qubit count mismatch");
  PureState out = psi;
  for (const Gate& g : c.gates) out = apply_gate(out, g);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& keep) {
  if (keep.qubits() != rho.qubits()) {
    throw std::invalid_argument("partial_trace: bipartition does not match state");
  }
  const int m = rho.qubits();
  const auto& kept = keep.side_a();
  const auto traced = keep.side_b();
  const int ks = static_cast<int>(kept.size());
  const int ts = static_cast<int>(traced.size());
  const Eigen::Index kdim = Eigen::Index(1) << ks;
  const Eigen::Index tdim = Eigen::Index(1) << ts;

  auto full_index = [&](Eigen::Index k, Eigen::Index t) {
    Eigen::Index j = 0;
    for (int i = 0; i < ks; ++i) {
      j |= ((k >> (ks - 1 - i)) & 1) << (m - 1 - kept[i]);
    }
    for (int i = 0; i < ts; ++i) {
      j |= ((t >> (ts - 1 - i)) & 1) << (m - 1 - traced[i]);
    }
    return j;
  };

  Matrix out = Matrix::Zero(kdim, kdim);
  for (Eigen::Index a = 0; a < kdim; ++a) {
    for (Eigen::Index b = 0; b < kdim; ++b) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < tdim; ++t) {
        sum += rho.matrix()(full_index(a, t), full_index(b, t));
      }
      out(a, b) = sum;
    }
  }
  return DensityMatrix(ks, std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& part) {
  if (part.qubits() != rho.qubits()) {
    throw std::invalid_argument("partial_transpose: bipartition does not match state");
  }
  return partial_transpose(rho.matrix(), part);
}

Matrix partial_transpose(const Matrix& rho, const Bipartition& part) {
  const int m = part.qubits();
  const Eigen::Index dim = Eigen::Index(1) << m;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_transpose: matrix does not match bipartition");
  }
  Eigen::Index amask = 0;
  for (int q : part.side_a()) amask |= Eigen::Index(1) << (m - 1 - q);

  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      // Swap the side-a bits between row and column.
      const Eigen::Index rr = (r & ~amask) | (c & amask);
      const Eigen::Index cc = (c & ~amask) | (r & amask);
      out(rr, cc) = rho(r, c);
    }
  }
  return out;
}

double expectation(const DensityMatrix& rho, const Matrix& observable,
                   const std::vector<int>& qubits) {
  if (!is_hermitian(observable, 1e-12)) {
    throw std::invalid_argument("expectation: observable is not Hermitian");
  }
  const Matrix full = embed_operator(observable, qubits, rho.qubits());
  const Complex value = (rho.matrix() * full).trace();
  if (std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error("expectation: trace has non-negligible imaginary part");
  }
  return value.real();
}

DensityMatrix dqc1_initial_state(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("dqc1_initial_state: n must be >= 1");
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("dqc1_initial_state: alpha must be in [0,1]");
  }
  Matrix control = Matrix::Zero(2, 2);
  control(0, 0) = (1.0 + alpha) / 2.0;
  control(1, 1) = (1.0 - alpha) / 2.0;
  const Eigen::Index rdim = Eigen::Index(1) << n;
  const Matrix reg = Matrix::Identity(rdim, rdim) / double(rdim);
  return DensityMatrix(n + 1, kron(control, reg));
}

}  // namespace djsim
