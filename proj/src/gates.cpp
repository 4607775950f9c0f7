#include "djsim/gates.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace djsim {

namespace {

void check_index(int q, int m, const char* what) {
  if (q < 0 || q >= m) {
    throw std::out_of_range(std::string(what) + ": qubit index out of range");
  }
}

Matrix hadamard_2x2() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Matrix rotz_2x2(double theta) {
  Matrix r = Matrix::Zero(2, 2);
  r(0, 0) = std::polar(1.0, -theta / 2.0);
  r(1, 1) = std::polar(1.0, theta / 2.0);
  return r;
}

std::string format_angle(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", theta);
  return buf;
}

}  // namespace

Matrix gate_matrix(const Gate& gate, int m) {
  const Eigen::Index dim = Eigen::Index(1) << m;
  return std::visit(
      [&](const auto& g) -> Matrix {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HadamardGate>) {
          check_index(g.qubit, m, "Hadamard");
          return embed_operator(hadamard_2x2(), {g.qubit}, m);
        } else if constexpr (std::is_same_v<T, RotZGate>) {
          check_index(g.qubit, m, "RotZ");
          return embed_operator(rotz_2x2(g.theta), {g.qubit}, m);
        } else if constexpr (std::is_same_v<T, CnotGate>) {
          check_index(g.control, m, "CNOT");
          check_index(g.target, m, "CNOT");
          if (g.control == g.target) {
            throw std::invalid_argument("CNOT: control equals target");
          }
          Matrix u = Matrix::Zero(dim, dim);
          const Eigen::Index cbit = Eigen::Index(1) << (m - 1 - g.control);
          const Eigen::Index tbit = Eigen::Index(1) << (m - 1 - g.target);
          for (Eigen::Index j = 0; j < dim; ++j) {
            u((j & cbit) ? (j ^ tbit) : j, j) = 1.0;
          }
          return u;
        } else if constexpr (std::is_same_v<T, DiagonalGate>) {
          if (static_cast<Eigen::Index>(g.phases.size()) != dim) {
            throw std::invalid_argument("Diagonal: phase vector length mismatch");
          }
          Matrix u = Matrix::Zero(dim, dim);
          for (Eigen::Index j = 0; j < dim; ++j) {
            u(j, j) = std::polar(1.0, g.phases[j]);
          }
          return u;
        } else if constexpr (std::is_same_v<T, ControlledDiagonalGate>) {
          check_index(g.control, m, "ControlledDiagonal");
          if (static_cast<Eigen::Index>(g.phases.size()) != dim / 2) {
            throw std::invalid_argument("ControlledDiagonal: phase vector length mismatch");
          }
          const Eigen::Index cbit = Eigen::Index(1) << (m - 1 - g.control);
          Matrix u = Matrix::Zero(dim, dim);
          for (Eigen::Index j = 0; j < dim; ++j) {
            if (j & cbit) {
              // Index over the remaining wires, ascending order.
              const Eigen::Index low = j & (cbit - 1);
              const Eigen::Index high = (j >> 1) & ~(cbit - 1);
              u(j, j) = std::polar(1.0, g.phases[high | low]);
            } else {
              u(j, j) = 1.0;
            }
          }
          return u;
        } else {
          static_assert(std::is_same_v<T, CustomUnitaryGate>);
          if (!is_unitary(g.matrix, 1e-12)) {
            throw std::invalid_argument("CustomUnitary: matrix is not unitary");
          }
          if (g.matrix.rows() != (Eigen::Index(1) << g.qubits.size())) {
            throw std::invalid_argument("CustomUnitary: matrix size does not match qubit list");
          }
          for (int q : g.qubits) check_index(q, m, "CustomUnitary");
          return embed_operator(g.matrix, g.qubits, m);
        }
      },
      gate);
}

std::string gate_description(const Gate& gate) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HadamardGate>) {
          return "H " + std::to_string(g.qubit);
        } else if constexpr (std::is_same_v<T, RotZGate>) {
          return "RZ " + std::to_string(g.qubit) + " " + format_angle(g.theta);
        } else if constexpr (std::is_same_v<T, CnotGate>) {
          return "CNOT " + std::to_string(g.control) + " " + std::to_string(g.target);
        } else if constexpr (std::is_same_v<T, DiagonalGate>) {
          return "DIAG";
        } else if constexpr (std::is_same_v<T, ControlledDiagonalGate>) {
          return "CDIAG c=" + std::to_string(g.control);
        } else {
          return "UNITARY";
        }
      },
      gate);
}

bool is_cnot(const Gate& gate) {
  return std::holds_alternative<CnotGate>(gate);
}

Gate inverse(const Gate& gate) {
  return std::visit(
      [](const auto& g) -> Gate {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HadamardGate> || std::is_same_v<T, CnotGate>) {
          return g;
        } else if constexpr (std::is_same_v<T, RotZGate>) {
          return RotZGate{g.qubit, -g.theta};
        } else if constexpr (std::is_same_v<T, DiagonalGate>) {
          DiagonalGate inv = g;
          for (double& p : inv.phases) p = -p;
          return inv;
        } else if constexpr (std::is_same_v<T, ControlledDiagonalGate>) {
          ControlledDiagonalGate inv = g;
          for (double& p : inv.phases) p = -p;
          return inv;
        } else {
          static_assert(std::is_same_v<T, CustomUnitaryGate>);
          return CustomUnitaryGate{g.matrix.adjoint(), g.qubits};
        }
      },
      gate);
}

void Circuit::validate() const {
  for (const Gate& g : gates) {
    gate_matrix(g, m);  // throws on any index/shape violation
  }
}

Matrix Circuit::unitary() const {
  Matrix u = identity_matrix(m);
  for (const Gate& g : gates) {
    u = gate_matrix(g, m) * u;
  }
  return std::polar(1.0, global_phase) * u;
}

int Circuit::count_cnots() const {
  int n = 0;
  for (const Gate& g : gates) n += is_cnot(g) ? 1 : 0;
  return n;
}

int Circuit::count_rotations() const {
  int n = 0;
  for (const Gate& g : gates) n += std::holds_alternative<RotZGate>(g) ? 1 : 0;
  return n;
}

Circuit inverse_circuit(const Circuit& c) {
  Circuit inv;
  inv.m = c.m;
  inv.global_phase = -c.global_phase;
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    inv.gates.push_back(inverse(*it));
  }
  return inv;
}

}  // namespace djsim
