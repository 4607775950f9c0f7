#include "djsim/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "djsim/rng.hpp"

namespace djsim {

namespace {

constexpr double kClassifyThreshold = 1e-9;

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

InferredClass classify_expectation(double exp_x, double alpha) {
  if (alpha < kClassifyThreshold) return InferredClass::Inconclusive;
  return std::abs(exp_x) < kClassifyThreshold ? InferredClass::Balanced
                                              : InferredClass::Constant;
}

void require_constant_or_balanced(const OracleFunction& f, const char* where) {
  if (!f.is_constant() && !f.is_balanced()) {
    throw std::invalid_argument(std::string(where) + ": function must be constant or balanced");
  }
}

}  // namespace

std::string to_string(InferredClass c) {
  switch (c) {
    case InferredClass::Constant: return "constant";
    case InferredClass::Balanced: return "balanced";
    case InferredClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DQC1Outcome run_dqc1(const OracleFunction& f, double alpha) {
  require_constant_or_balanced(f, "run_dqc1");
  DensityMatrix state = dqc1_initial_state(f.n, alpha);
  state = apply_gate(state, HadamardGate{0});
  state = apply_gate(state, controlled_oracle_unitary(f));

  const Bipartition control = Bipartition::single(f.n + 1, 0);
  DensityMatrix control_state = partial_trace(state, control);
  const double exp_x = expectation(state, pauli_x(), {0});
  const double exp_xx = expectation(state, Matrix::Identity(2, 2), {0});  // <sigma_x^2> = <I>
  const double var_x = std::sqrt(std::max(0.0, exp_xx - exp_x * exp_x));

  DQC1Outcome out{std::move(state), std::move(control_state), exp_x, var_x,
                  classify_expectation(exp_x, alpha)};
  return out;
}

DQCpOutcome run_dqcp(const OracleFunction& f) {
  require_constant_or_balanced(f, "run_dqcp");
  const int m = f.n + 1;
  // Control |0>, register |+>^n.
  Vector amps = Vector::Zero(Eigen::Index(1) << m);
  const Eigen::Index half = Eigen::Index(1) << f.n;
  const double a = 1.0 / std::sqrt(double(half));
  for (Eigen::Index x = 0; x < half; ++x) amps[x] = a;
  PureState state(m, std::move(amps));

  state = apply_gate(state, HadamardGate{0});
  state = apply_gate(state, controlled_oracle_unitary(f));

  // <sigma_x> on the control from the amplitudes directly.
  Complex cross = 0.0;
  for (Eigen::Index x = 0; x < half; ++x) {
    cross += std::conj(state.amplitudes()[x]) * state.amplitudes()[x + half];
  }
  const double exp_x = 2.0 * cross.real();
  const double var_x = std::sqrt(std::max(0.0, 1.0 - exp_x * exp_x));

  DQCpOutcome out{std::move(state), exp_x, var_x, classify_expectation(exp_x, 1.0)};
  return out;
}

Circuit dqc1_synthesized_circuit(const OracleFunction& f) {
  const int m = f.n + 1;
  const SynthesisResult synth = synthesize_diagonal(diagonal_spec_of(controlled_oracle_unitary(f), m));
  Circuit c;
  c.m = m;
  c.global_phase = synth.global_phase;
  c.gates.push_back(HadamardGate{0});
  c.gates.insert(c.gates.end(), synth.circuit.gates.begin(), synth.circuit.gates.end());
  return c;
}

namespace {

std::vector<StepReport> trace_impl(const Circuit& circuit,
                                   std::optional<DensityMatrix> dm_state,
                                   std::optional<PureState> pure_state,
                                   const std::vector<Bipartition>& splits,
                                   const TraceOptions& opts) {
  std::vector<StepReport> reports;
  reports.reserve(circuit.gates.size());

  int index = 0;
  for (const Gate& gate : circuit.gates) {
    if (pure_state) {
      pure_state = apply_gate(*pure_state, gate);
    } else {
      dm_state = apply_gate(*dm_state, gate);
    }
    const DensityMatrix rho = pure_state ? DensityMatrix::from_pure(*pure_state) : *dm_state;

    StepReport report;
    report.step_index = ++index;
    report.gate = gate_description(gate);

    for (const Bipartition& split : splits) {
      SplitReport sr;
      sr.side_a = split.side_a();
      if (opts.evaluate_negativity) sr.negativity = negativity(rho, split);
      if (opts.evaluate_discord) {
        int measured = -1;
        if (split.size_a() == 1) {
          measured = split.side_a().front();
        } else if (split.size_b() == 1) {
          measured = split.side_b().front();
        }
        if (measured >= 0) {
          sr.measured_qubit = measured;
          sr.discord = discord(rho, measured, opts.discord_opts);
        }
      }
      report.splits.push_back(std::move(sr));
    }

    if (opts.evaluate_classicality) {
      const ClassicalityResult cls = is_classical(rho, opts.classical_opts);
      report.classical = cls.classical;
      report.residual = cls.residual;
    }

    bool correlated = opts.evaluate_classicality && !report.classical;
    for (const SplitReport& sr : report.splits) {
      if (sr.discord && *sr.discord > opts.discord_zero) correlated = true;
    }
    report.quantum_correlated = correlated;

    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace

std::vector<StepReport> correlation_trace(const Circuit& circuit, const DensityMatrix& initial,
                                          const std::vector<Bipartition>& splits,
                                          const TraceOptions& opts) {
  if (circuit.m != initial.qubits()) {
    throw std::invalid_argument("correlation_trace: circuit does not match state");
  }
  return trace_impl(circuit, initial, std::nullopt, splits, opts);
}

std::vector<StepReport> correlation_trace(const Circuit& circuit, const PureState& initial,
                                          const std::vector<Bipartition>& splits,
                                          const TraceOptions& opts) {
  if (circuit.m != initial.qubits()) {
    throw std::invalid_argument("correlation_trace: circuit does not match state");
  }
  return trace_impl(circuit, std::nullopt, initial, splits, opts);
}

std::vector<Bipartition> dqc1_paper_splits(int total_qubits) {
  std::vector<Bipartition> splits;
  splits.push_back(Bipartition::single(total_qubits, 0));
  if (total_qubits > 2) {
    splits.push_back(Bipartition::top(total_qubits, total_qubits / 2));
  }
  return splits;
}

// --- NMR -------------------------------------------------------------------

const std::vector<NmrTerm>& nmr_heff_terms() {
  static const std::vector<NmrTerm> terms = {
      {2.0, {1, 3}, "2 Z1Z3"},
      {-4.0, {1, 2, 3}, "-4 Z1Z2Z3"},
      {2.0, {2, 3}, "2 Z2Z3"},
      {2.0, {1, 2}, "2 Z1Z2"},
      {4.0, {1, 4}, "4 Z1Z4"},
      {-3.0, {1}, "-3 Z1"},
      {-1.0, {2}, "-1 Z2"},
      {-1.0, {3}, "-1 Z3"},
      {-2.0, {4}, "-2 Z4"},
  };
  return terms;
}

DiagonalGate nmr_term_gate(const NmrTerm& term) {
  // exp(-i (pi/4) c prod sigma_z/2): basis state j picks up the phase
  // -(pi/4) c prod(z_i)/2^{|spins|} with z_i = +1 for bit 0.
  // Spin labels map to wires as 1->0 (control), 2->1, 3->2, 4->3.
  constexpr int m = 4;
  DiagonalGate gate;
  gate.phases.assign(16, 0.0);
  const double scale = -(kPi / 4.0) * term.coefficient / std::pow(2.0, double(term.spins.size()));
  for (std::size_t j = 0; j < 16; ++j) {
    int sign = 1;
    for (int spin : term.spins) {
      const int wire = spin - 1;
      if ((j >> (m - 1 - wire)) & 1) sign = -sign;
    }
    gate.phases[j] = scale * sign;
  }
  return gate;
}

std::vector<NMRTermReport> nmr_heff_sequence(const DiscordOptions& opts) {
  DensityMatrix state = dqc1_initial_state(3, 1.0);
  state = apply_gate(state, HadamardGate{0});

  std::vector<NMRTermReport> reports;
  reports.reserve(nmr_heff_terms().size());
  int index = 0;
  for (const NmrTerm& term : nmr_heff_terms()) {
    state = apply_gate(state, nmr_term_gate(term));
    NMRTermReport report{++index, term.label, state, {}};
    for (int q = 0; q < 4; ++q) {
      report.discords.push_back(discord(state, q, opts));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

double nmr_max_pairwise_commutator() {
  const auto& terms = nmr_heff_terms();
  double worst = 0.0;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    const Matrix ua = gate_matrix(nmr_term_gate(terms[a]), 4);
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      const Matrix ub = gate_matrix(nmr_term_gate(terms[b]), 4);
      worst = std::max(worst, (ua * ub - ub * ua).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

OracleFunction nmr_target_function() {
  // f(x1, x2, x3) = x1 x2 xor x3 on the three mixed qubits.
  std::vector<uint8_t> table(8);
  for (int j = 0; j < 8; ++j) {
    const int x1 = (j >> 2) & 1, x2 = (j >> 1) & 1, x3 = j & 1;
    table[j] = uint8_t((x1 & x2) ^ x3);
  }
  return classify(table);
}

double nmr_final_unitary_deviation() {
  Matrix product = identity_matrix(4);
  for (const NmrTerm& term : nmr_heff_terms()) {
    product = gate_matrix(nmr_term_gate(term), 4) * product;
  }
  const Matrix target = gate_matrix(controlled_oracle_unitary(nmr_target_function()), 4);
  return deviation_up_to_global_phase(product, target);
}

// --- decision procedures -----------------------------------------------------

DecisionSample decision_sample(OracleClass cls, const std::optional<OracleFunction>& f, int k,
                               DecisionModel model, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("decision_sample: k must be >= 2");
  if (cls == OracleClass::Other) {
    throw std::invalid_argument("decision_sample: class must be constant or balanced");
  }
  Rng rng(seed);

  if (model == DecisionModel::Quantum) {
    // Outcomes are +-1: fixed for a constant function, a fair coin per
    // restarted run for a balanced one.
    int first = 0;
    for (int i = 1; i <= k; ++i) {
      int outcome;
      if (cls == OracleClass::Balanced) {
        outcome = rng.coin() ? 1 : -1;
      } else {
        outcome = (cls == OracleClass::Constant0) ? 1 : -1;
      }
      if (i == 1) {
        first = outcome;
      } else if (outcome != first) {
        return {InferredClass::Balanced, i};
      }
    }
    return {InferredClass::Constant, k};
  }

  if (!f) throw std::invalid_argument("decision_sample: classical model needs a truth table");
  const std::size_t inputs = f->truth_table.size();
  if (std::size_t(k) > inputs) {
    throw std::invalid_argument("decision_sample: k exceeds the number of distinct inputs");
  }
  // Partial Fisher-Yates draw of k distinct inputs.
  std::vector<std::uint32_t> pool(inputs);
  for (std::size_t i = 0; i < inputs; ++i) pool[i] = std::uint32_t(i);
  int first = -1;
  for (int i = 0; i < k; ++i) {
    const std::size_t pick = i + rng.uniform_below(inputs - i);
    std::swap(pool[i], pool[pick]);
    const int value = f->truth_table[pool[i]];
    if (i == 0) {
      first = value;
    } else if (value != first) {
      return {InferredClass::Balanced, i + 1};
    }
  }
  return {InferredClass::Constant, k};
}

double decision_error_frequency(const OracleFunction& f, int k, DecisionModel model,
                                int trials, std::uint64_t master_seed) {
  if (trials < 1) throw std::invalid_argument("decision_error_frequency: trials must be >= 1");
  if (!f.is_balanced()) {
    throw std::invalid_argument("decision_error_frequency: function must be balanced");
  }
  long long errors = 0;
  for (int i = 0; i < trials; ++i) {
    const DecisionSample s =
        decision_sample(f.cls, f, k, model, master_seed + std::uint64_t(i));
    if (s.guess == InferredClass::Constant) ++errors;
  }
  return double(errors) / double(trials);
}

// --- DQCp sweep ----------------------------------------------------------------

Bipartition dqcp_sweep_split(int n) {
  const int m = n + 1;
  const int top = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
  return Bipartition::top(m, top);
}

std::vector<SweepPoint> dqcp_negativity_sweep(int n_min, int n_max, int samples,
                                              std::uint64_t master_seed) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("dqcp_negativity_sweep: bad range");
  if (samples < 1) throw std::invalid_argument("dqcp_negativity_sweep: samples must be >= 1");

  std::vector<SweepPoint> points;
  std::uint64_t run_index = 0;
  for (int n = n_min; n <= n_max; ++n) {
    const Bipartition split = dqcp_sweep_split(n);
    SweepPoint pt;
    pt.n = n;
    pt.s = std::min(split.size_a(), split.size_b());
    for (int i = 0; i < samples; ++i, ++run_index) {
      const OracleFunction f = random_balanced(n, master_seed + run_index);
      const DQCpOutcome outcome = run_dqcp(f);
      pt.max_negativity = std::max(pt.max_negativity, negativity_pure(outcome.final_state, split));
    }
    points.push_back(pt);
  }
  return points;
}

}  // namespace djsim
