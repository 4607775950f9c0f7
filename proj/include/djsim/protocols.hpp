// End-to-end experiment drivers: one-clean-qubit (DQC1) and pure-register
// (DQCp) runs of the Deutsch-Jozsa oracle circuit, per-gate correlation
// traces over the synthesized circuit, the NMR effective-Hamiltonian term
// sequence, sampling decision procedures and the DQCp negativity sweep.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djsim/correlations.hpp"
#include "djsim/oracle.hpp"
#include "djsim/simulate.hpp"
#include "djsim/synth.hpp"

namespace djsim {

enum class InferredClass { Constant, Balanced, Inconclusive };

std::string to_string(InferredClass c);

struct DQC1Outcome {
  DensityMatrix final_state;
  DensityMatrix control_state;  // 2x2 reduced state of the control
  double exp_x = 0.0;           // <sigma_x> on the control
  double var_x = 0.0;           // sqrt(1 - exp_x^2)
  InferredClass inferred_class = InferredClass::Inconclusive;
};

/// Run the DQC1 circuit (Hadamard on the control, then the controlled
/// oracle) from the initial state with polarization alpha. The function
/// must be constant or balanced.
DQC1Outcome run_dqc1(const OracleFunction& f, double alpha);

struct DQCpOutcome {
  PureState final_state;
  double exp_x = 0.0;
  double var_x = 0.0;
  InferredClass inferred_class = InferredClass::Inconclusive;
};

/// Same circuit with control |0> and register |+>^n.
DQCpOutcome run_dqcp(const OracleFunction& f);

/// The full DQC1 circuit with the oracle compiled to RotZ/CNOT gates:
/// Hadamard on the control followed by the synthesized controlled oracle.
Circuit dqc1_synthesized_circuit(const OracleFunction& f);

struct SplitReport {
  std::vector<int> side_a;
  double negativity = 0.0;
  std::optional<double> discord;  // set when one side is a single qubit
  int measured_qubit = -1;
};

struct StepReport {
  int step_index = 0;  // 1-based; state after this many gates
  std::string gate;
  std::vector<SplitReport> splits;
  bool classical = false;  // full-state product-basis diagonalizability
  double residual = 0.0;
  bool quantum_correlated = false;  // !classical or any discord above threshold
};

struct TraceOptions {
  bool evaluate_negativity = true;
  bool evaluate_discord = true;
  bool evaluate_classicality = true;
  double discord_zero = 1e-8;  // threshold for the quantum_correlated flag
  DiscordOptions discord_opts = {};
  ClassicalityOptions classical_opts = {};
};

/// One StepReport after each gate of the circuit: negativity for every
/// split, discord for splits whose smaller side is one qubit, and the
/// product-basis classicality test on the full state.
std::vector<StepReport> correlation_trace(const Circuit& circuit, const DensityMatrix& initial,
                                          const std::vector<Bipartition>& splits,
                                          const TraceOptions& opts = {});
std::vector<StepReport> correlation_trace(const Circuit& circuit, const PureState& initial,
                                          const std::vector<Bipartition>& splits,
                                          const TraceOptions& opts = {});

/// The two splits analyzed for the synthesized DQC1 run: the control
/// against the rest, and the top half against the bottom half.
std::vector<Bipartition> dqc1_paper_splits(int total_qubits);

// --- NMR effective-Hamiltonian sequence ------------------------------------

struct NmrTerm {
  double coefficient = 0.0;     // dimensionless prefactor c_k
  std::vector<int> spins;       // paper spin labels (1-based)
  std::string label;            // e.g. "2 Z1Z3"
};

/// The nine commuting terms in the order they are applied. Each evolves the
/// state by exp(-i (pi/4) c_k P_k) with P_k the product of sigma_z/2 on the
/// listed spins. Spin 1 is the control and maps to wire 0; spins 2,3,4 are
/// the mixed qubits on wires 1,2,3.
const std::vector<NmrTerm>& nmr_heff_terms();

/// Diagonal gate for one term on the 4-qubit register.
DiagonalGate nmr_term_gate(const NmrTerm& term);

struct NMRTermReport {
  int term_index = 0;  // 1..9
  std::string label;
  DensityMatrix state;             // state after this term
  std::vector<double> discords;    // one per 1-vs-3 split, measured qubit 0..3
};

/// Simulate the experiment: start from the n=3, alpha=1 initial state,
/// apply the Hadamard on the control, then the nine terms in order,
/// reporting the discord of every 1-vs-3 bipartition after each term.
std::vector<NMRTermReport> nmr_heff_sequence(const DiscordOptions& opts = {});

/// Max commutator max-norm over all term pairs (zero: the terms are all
/// diagonal).
double nmr_max_pairwise_commutator();

/// Entrywise deviation (after global-phase alignment) between the product
/// of the nine term unitaries and the controlled oracle for the function
/// the sequence encodes (x1 x2 xor x3 on the three mixed qubits).
double nmr_final_unitary_deviation();

/// The function encoded by the NMR sequence: x1 x2 xor x3.
OracleFunction nmr_target_function();

// --- sampling decision procedures ------------------------------------------

enum class DecisionModel { Quantum, Classical };

struct DecisionSample {
  InferredClass guess = InferredClass::Inconclusive;
  int measurements_used = 0;
};

/// One run of the fixed-number-of-measurements procedure: guess Balanced as
/// soon as two outcomes differ, Constant after k equal outcomes.
/// The quantum model draws +-1 outcomes (deterministic for a constant
/// function, a fair coin per measurement for a balanced one) and needs only
/// the class; the classical model samples k distinct inputs of an explicit
/// truth table. k >= 2; the classical model requires k <= 2^n.
DecisionSample decision_sample(OracleClass cls, const std::optional<OracleFunction>& f, int k,
                               DecisionModel model, std::uint64_t seed);

/// Fraction of `trials` independent runs on a balanced function that end in
/// an erroneous Constant guess. Run i uses seed master_seed + i.
double decision_error_frequency(const OracleFunction& f, int k, DecisionModel model,
                                int trials, std::uint64_t master_seed);

// --- DQCp negativity sweep ---------------------------------------------------

struct SweepPoint {
  int n = 0;                   // work qubits
  int s = 0;                   // smaller partition size
  double max_negativity = 0.0; // max over the sampled balanced functions
};

/// Split used by the sweep: the top (n+1)/2 wires for odd n, the top n/2
/// wires for even n (control included among the top wires).
Bipartition dqcp_sweep_split(int n);

/// For each n in [n_min, n_max], draw `samples` random balanced functions
/// (run index r for the r-th draw overall; seed master_seed + r), run the
/// pure-register circuit and record the maximum negativity across the
/// sweep split.
std::vector<SweepPoint> dqcp_negativity_sweep(int n_min, int n_max, int samples,
                                              std::uint64_t master_seed);

}  // namespace djsim
