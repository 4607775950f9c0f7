#include "djsim/synth.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace djsim {

namespace {

constexpr double kDeadAngle = 1e-12;  // below this a rotation is elided

// Reverse the low `m` bits: converts between basis-index bit positions
// (qubit 0 = most significant) and subset masks (bit q = qubit q).
std::uint32_t reverse_bits(std::uint32_t v, int m) {
  std::uint32_t out = 0;
  for (int i = 0; i < m; ++i) {
    out |= ((v >> i) & 1u) << (m - 1 - i);
  }
  return out;
}

void append_chain_toggle(Circuit& c, std::uint32_t from, std::uint32_t to, int rep) {
  std::uint32_t diff = from ^ to;
  while (diff) {
    const int q = std::countr_zero(diff);
    c.gates.push_back(CnotGate{q, rep});
    diff &= diff - 1;
  }
}

}  // namespace

void DiagonalSpec::validate() const {
  if (m < 1 || m > 24) throw std::invalid_argument("DiagonalSpec: bad qubit count");
  if (phases.size() != (std::size_t(1) << m)) {
    throw std::invalid_argument("DiagonalSpec: phase vector length mismatch");
  }
  for (double p : phases) {
    if (!std::isfinite(p)) throw std::invalid_argument("DiagonalSpec: non-finite phase");
  }
}

DiagonalSpec diagonal_spec_of(const DiagonalGate& gate) {
  DiagonalSpec spec;
  spec.phases = gate.phases;
  std::size_t len = spec.phases.size();
  int m = 0;
  while ((std::size_t(1) << m) < len) ++m;
  spec.m = m;
  spec.validate();
  return spec;
}

DiagonalSpec diagonal_spec_of(const ControlledDiagonalGate& gate, int m) {
  DiagonalSpec spec;
  spec.m = m;
  spec.phases.assign(std::size_t(1) << m, 0.0);
  const std::size_t cbit = std::size_t(1) << (m - 1 - gate.control);
  if (gate.phases.size() != (std::size_t(1) << (m - 1))) {
    throw std::invalid_argument("diagonal_spec_of: controlled phase vector length mismatch");
  }
  for (std::size_t j = 0; j < spec.phases.size(); ++j) {
    if (j & cbit) {
      const std::size_t low = j & (cbit - 1);
      const std::size_t high = (j >> 1) & ~(cbit - 1);
      spec.phases[j] = gate.phases[high | low];
    }
  }
  spec.validate();
  return spec;
}

WalshDecomposition walsh_coefficients(const DiagonalSpec& spec) {
  spec.validate();
  const std::size_t dim = std::size_t(1) << spec.m;
  std::vector<double> c = spec.phases;
  // Unnormalized Walsh-Hadamard butterfly; c[b] ends up as
  // sum_j phases[j] * (-1)^{popcount(j & b)}.
  for (std::size_t h = 1; h < dim; h <<= 1) {
    for (std::size_t i = 0; i < dim; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = c[j];
        const double y = c[j + h];
        c[j] = x + y;
        c[j + h] = x - y;
      }
    }
  }
  WalshDecomposition w;
  w.global_phase = c[0] / double(dim);
  for (std::size_t b = 1; b < dim; ++b) {
    const std::uint32_t subset = reverse_bits(std::uint32_t(b), spec.m);
    w.angles[subset] = 2.0 * c[b] / double(dim);
  }
  return w;
}

std::vector<double> reconstruct_phases(const WalshDecomposition& w, int m) {
  const std::size_t dim = std::size_t(1) << m;
  std::vector<double> phases(dim, w.global_phase);
  for (const auto& [subset, angle] : w.angles) {
    const std::uint32_t jmask = reverse_bits(subset, m);
    for (std::size_t j = 0; j < dim; ++j) {
      const int parity = std::popcount(std::uint32_t(j) & jmask) & 1;
      phases[j] += (parity ? -1.0 : 1.0) * angle / 2.0;
    }
  }
  return phases;
}

SynthesisResult synthesize_diagonal(const DiagonalSpec& spec) {
  spec.validate();
  WalshDecomposition w = walsh_coefficients(spec);

  SynthesisResult result;
  result.global_phase = w.global_phase;
  result.angles = w.angles;
  result.circuit.m = spec.m;
  result.circuit.global_phase = w.global_phase;

  for (int rep = 0; rep < spec.m; ++rep) {
    // Subsets with representative `rep` are T | {rep}, T a subset of the
    // lower-index qubits, walked in Gray-code order.
    const std::uint32_t rep_bit = 1u << rep;
    const std::uint32_t count = 1u << rep;
    std::uint32_t current = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t t = i ^ (i >> 1);
      const double theta = [&] {
        auto it = w.angles.find(t | rep_bit);
        return it == w.angles.end() ? 0.0 : -it->second;
      }();
      if (std::abs(theta) <= kDeadAngle) continue;
      append_chain_toggle(result.circuit, current, t, rep);
      current = t;
      result.circuit.gates.push_back(RotZGate{rep, theta});
    }
    append_chain_toggle(result.circuit, current, 0, rep);
  }
  return result;
}

double verify_equivalence(const Circuit& circuit, const DiagonalSpec& spec) {
  spec.validate();
  if (circuit.m != spec.m) {
    throw std::invalid_argument("verify_equivalence: qubit count mismatch");
  }
  const Matrix u = circuit.unitary();  // includes e^{i global_phase}
  const Eigen::Index dim = u.rows();
  Matrix target = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    target(j, j) = std::polar(1.0, spec.phases[j]);
  }
  return max_abs_diff(u, target);
}

std::array<double, 15> collins_dqc1_angles(const OracleFunction& f) {
  if (f.n != 3) throw std::invalid_argument("collins_dqc1_angles: requires n = 3");
  const auto& t = f.truth_table;
  const double f0 = t[0], f1 = t[1], f2 = t[2], f3 = t[3];
  const double f4 = t[4], f5 = t[5], f6 = t[6], f7 = t[7];

  std::array<double, 15> theta{};
  theta[0] = -kPi * (f0 - f1 + f2 - f3 + f4 - f5 + f6 - f7) / 8.0;
  theta[1] = -theta[0];
  theta[2] = kPi * (f0 - f1 + f2 - f3 - f4 + f5 - f6 + f7) / 8.0;
  theta[3] = -theta[2];
  theta[4] = -kPi * (f0 - f1 - f2 + f3 - f4 + f5 + f6 - f7) / 8.0;
  theta[7] = -theta[4];
  theta[5] = -kPi * (f0 - f1 - f2 + f3 + f4 - f5 - f6 + f7) / 8.0;
  theta[6] = -theta[5];
  theta[8] = -kPi * (f0 + f1 - f2 - f3 + f4 + f5 - f6 - f7) / 8.0;
  theta[9] = -theta[8];
  theta[10] = kPi * (f0 + f1 - f2 - f3 - f4 - f5 + f6 + f7) / 8.0;
  theta[11] = -theta[10];
  theta[12] = -kPi * (f0 + f1 + f2 + f3 - f4 - f5 - f6 - f7) / 8.0;
  theta[13] = -theta[12];
  theta[14] = kPi * (f0 + f1 + f2 + f3 + f4 + f5 + f6 + f7) / 8.0;
  return theta;
}

const std::array<std::uint32_t, 15>& collins_dqc1_subsets() {
  // Wire subset each rotation acts on, as qubit bitmasks (bit 0 = control).
  // theta_k and its paired -theta partner differ exactly by membership of
  // the control qubit.
  static const std::array<std::uint32_t, 15> subsets = {
      0b1000,   // theta_0  {3}
      0b1001,   // theta_1  {0,3}
      0b1011,   // theta_2  {0,1,3}
      0b1010,   // theta_3  {1,3}
      0b1110,   // theta_4  {1,2,3}
      0b1100,   // theta_5  {2,3}
      0b1101,   // theta_6  {0,2,3}
      0b1111,   // theta_7  {0,1,2,3}
      0b0100,   // theta_8  {2}
      0b0101,   // theta_9  {0,2}
      0b0111,   // theta_10 {0,1,2}
      0b0110,   // theta_11 {1,2}
      0b0010,   // theta_12 {1}
      0b0011,   // theta_13 {0,1}
      0b0001,   // theta_14 {0}
  };
  return subsets;
}

Circuit collins_dqc1_circuit(const OracleFunction& f) {
  const auto theta = collins_dqc1_angles(f);
  const auto& subsets = collins_dqc1_subsets();

  Circuit c;
  c.m = 4;
  c.global_phase = theta[14] / 2.0;
  for (int k = 0; k < 15; ++k) {
    if (std::abs(theta[k]) <= kDeadAngle) continue;
    std::uint32_t s = subsets[k];
    int rep = 31 - std::countl_zero(s);
    const std::uint32_t others = s & ~(1u << rep);
    append_chain_toggle(c, 0, others, rep);
    c.gates.push_back(RotZGate{rep, theta[k]});
    append_chain_toggle(c, others, 0, rep);
  }
  return c;
}

std::string emit_netlist(const Circuit& circuit) {
  char buf[64];
  std::ostringstream out;
  out << "qubits " << circuit.m << "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", circuit.global_phase);
  out << "gphase " << buf << "\n";
  for (const Gate& g : circuit.gates) {
    if (const auto* rz = std::get_if<RotZGate>(&g)) {
      std::snprintf(buf, sizeof(buf), "%.17g", rz->theta);
      out << "RZ " << rz->qubit << " " << buf << "\n";
    } else if (const auto* cx = std::get_if<CnotGate>(&g)) {
      out << "CNOT " << cx->control << " " << cx->target << "\n";
    } else {
      throw std::invalid_argument("emit_netlist: only RZ and CNOT gates are supported");
    }
  }
  return out.str();
}

Circuit parse_netlist(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  Circuit c;
  if (!(in >> word) || word != "qubits" || !(in >> c.m) || c.m < 1) {
    throw std::invalid_argument("parse_netlist: expected 'qubits m' header");
  }
  if (!(in >> word) || word != "gphase" || !(in >> c.global_phase)) {
    throw std::invalid_argument("parse_netlist: expected 'gphase phi' header");
  }
  while (in >> word) {
    if (word == "RZ") {
      RotZGate g{};
      if (!(in >> g.qubit >> g.theta)) throw std::invalid_argument("parse_netlist: bad RZ line");
      c.gates.push_back(g);
    } else if (word == "CNOT") {
      CnotGate g{};
      if (!(in >> g.control >> g.target)) throw std::invalid_argument("parse_netlist: bad CNOT line");
      c.gates.push_back(g);
    } else {
      throw std::invalid_argument("parse_netlist: unknown gate '" + word + "'");
    }
  }
  c.validate();
  return c;
}

}  // namespace djsim
