#include "djsim/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "djsim/analytics.hpp"
#include "djsim/config.hpp"
#include "djsim/protocols.hpp"

namespace djsim::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_output(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << contents;
}

ordered_json complex_matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json step_reports_json(const std::vector<StepReport>& steps) {
  ordered_json arr = ordered_json::array();
  for (const StepReport& step : steps) {
    ordered_json js;
    js["step"] = step.step_index;
    js["gate"] = step.gate;
    ordered_json splits = ordered_json::array();
    for (const SplitReport& sr : step.splits) {
      ordered_json sj;
      sj["side_a"] = sr.side_a;
      sj["negativity"] = sr.negativity;
      if (sr.discord) {
        sj["measured_qubit"] = sr.measured_qubit;
        sj["discord"] = *sr.discord;
      } else {
        sj["discord"] = nullptr;
      }
      splits.push_back(std::move(sj));
    }
    js["splits"] = std::move(splits);
    js["classical"] = step.classical;
    js["residual"] = step.residual;
    js["quantum_correlated"] = step.quantum_correlated;
    arr.push_back(std::move(js));
  }
  return arr;
}

TraceOptions trace_options_from(const RunConfig& config) {
  TraceOptions opts;
  opts.discord_zero = config.thresholds.discord_zero;
  opts.classical_opts.tol = config.thresholds.classical_residual;
  return opts;
}

struct CommandContext {
  RunConfig config;
};

void run_dqc1_command(const CommandContext& ctx, const std::string& oracle_path, double alpha) {
  const OracleFunction f = load_oracle_file(oracle_path);
  if (f.n + 1 > ctx.config.limits.max_qubits_mixed) {
    throw std::invalid_argument("oracle exceeds max_qubits_mixed");
  }
  const DQC1Outcome outcome = run_dqc1(f, alpha);
  ordered_json js;
  js["model"] = "dqc1";
  js["n"] = f.n;
  js["alpha"] = alpha;
  js["oracle_class"] = to_string(f.cls);
  js["normalized_trace"] = normalized_trace(f);
  js["exp_x"] = outcome.exp_x;
  js["var_x"] = outcome.var_x;
  js["inferred_class"] = to_string(outcome.inferred_class);
  js["control_state"] = complex_matrix_json(outcome.control_state.matrix());
  write_output(ctx.config.output_path, js.dump(2) + "\n");
}

void run_dqcp_sweep(const CommandContext& ctx, int n_min, int n_max, int samples) {
  if (n_max + 1 > ctx.config.limits.max_qubits_pure) {
    throw std::invalid_argument("sweep exceeds max_qubits_pure");
  }
  const auto points = dqcp_negativity_sweep(n_min, n_max, samples, ctx.config.seed);
  std::ostringstream csv;
  csv << "n,s,max_negativity\n";
  for (const SweepPoint& pt : points) {
    csv << pt.n << "," << pt.s << "," << fmt17(pt.max_negativity) << "\n";
  }
  write_output(ctx.config.output_path, csv.str());
}

void run_synth_emit(const CommandContext& ctx, const std::string& oracle_path,
                    const std::string& netlist_out, bool verify) {
  const OracleFunction f = load_oracle_file(oracle_path);
  const int m = f.n + 1;
  const DiagonalSpec spec = diagonal_spec_of(controlled_oracle_unitary(f), m);
  const SynthesisResult synth = synthesize_diagonal(spec);
  if (verify) {
    const double deviation = verify_equivalence(synth.circuit, spec);
    std::cerr << "qubits=" << m << " rotations=" << synth.circuit.count_rotations()
              << " cnots=" << synth.circuit.count_cnots() << " deviation=" << fmt17(deviation)
              << "\n";
    if (deviation > ctx.config.thresholds.matrix_eq) {
      throw std::runtime_error("synthesized circuit deviates from the oracle");
    }
  }
  const std::string path = !netlist_out.empty() ? netlist_out : ctx.config.output_path;
  write_output(path, emit_netlist(synth.circuit));
}

void run_trace(const CommandContext& ctx, const std::string& oracle_path,
               const std::string& model, double alpha) {
  const OracleFunction f = load_oracle_file(oracle_path);
  const int m = f.n + 1;
  const Circuit circuit = dqc1_synthesized_circuit(f);
  const std::vector<Bipartition> splits = dqc1_paper_splits(m);
  const TraceOptions opts = trace_options_from(ctx.config);

  std::vector<StepReport> steps;
  if (model == "dqc1") {
    if (m > ctx.config.limits.max_qubits_mixed) {
      throw std::invalid_argument("oracle exceeds max_qubits_mixed");
    }
    steps = correlation_trace(circuit, dqc1_initial_state(f.n, alpha), splits, opts);
  } else if (model == "dqcp") {
    if (m > ctx.config.limits.max_qubits_mixed) {
      // the trace converts to density matrices per step, so the mixed limit applies
      throw std::invalid_argument("oracle exceeds max_qubits_mixed");
    }
    // Control |0>, register |+>^n.
    Vector amps = Vector::Zero(Eigen::Index(1) << m);
    const Eigen::Index half = Eigen::Index(1) << f.n;
    for (Eigen::Index x = 0; x < half; ++x) amps[x] = 1.0 / std::sqrt(double(half));
    steps = correlation_trace(circuit, PureState(m, std::move(amps)), splits, opts);
  } else {
    throw std::invalid_argument("trace: model must be dqc1 or dqcp");
  }

  ordered_json js;
  js["model"] = model;
  js["n"] = f.n;
  js["alpha"] = model == "dqc1" ? ordered_json(alpha) : ordered_json(nullptr);
  js["oracle_class"] = to_string(f.cls);
  js["truth_table"] = format_truth_table(f);
  js["gates"] = circuit.gates.size();
  js["cnots"] = circuit.count_cnots();
  js["steps"] = step_reports_json(steps);
  write_output(ctx.config.output_path, js.dump(2) + "\n");
}

void run_nmr_trace(const CommandContext& ctx) {
  const auto reports = nmr_heff_sequence();
  ordered_json js;
  js["commutator_max"] = nmr_max_pairwise_commutator();
  js["final_unitary_deviation"] = nmr_final_unitary_deviation();
  js["target_truth_table"] = format_truth_table(nmr_target_function());
  ordered_json terms = ordered_json::array();
  for (const NMRTermReport& report : reports) {
    ordered_json tj;
    tj["index"] = report.term_index;
    tj["label"] = report.label;
    tj["discords"] = report.discords;
    terms.push_back(std::move(tj));
  }
  js["terms"] = std::move(terms);
  write_output(ctx.config.output_path, js.dump(2) + "\n");
}

void run_perr(const CommandContext& ctx, int k_max, std::vector<int> ns, double p,
              int monte_carlo) {
  if (ns.empty()) ns = {3, 5, 7};
  const auto points = perr_curve(k_max, ns, p);
  std::ostringstream csv;
  csv << "k,n,p,p_err_classical,p_err_quantum";
  if (monte_carlo > 0) csv << ",mc_classical,mc_quantum";
  csv << "\n";
  std::uint64_t row = 0;
  for (const ErrorCurvePoint& pt : points) {
    csv << pt.k << "," << pt.n << "," << fmt17(pt.p) << "," << fmt17(pt.p_err_classical) << ","
        << fmt17(pt.p_err_quantum);
    if (monte_carlo > 0) {
      // Canonical balanced function: first half zeros, second half ones.
      std::vector<uint8_t> table(std::size_t(1) << pt.n, 0);
      std::fill(table.begin() + table.size() / 2, table.end(), uint8_t(1));
      const OracleFunction f = classify(table);
      const std::uint64_t base = ctx.config.seed + row * std::uint64_t(monte_carlo) * 2;
      double mc_classical = 0.0;
      if (pt.k <= int(table.size())) {
        mc_classical =
            decision_error_frequency(f, pt.k, DecisionModel::Classical, monte_carlo, base);
      }
      const double mc_quantum = decision_error_frequency(
          f, pt.k, DecisionModel::Quantum, monte_carlo, base + std::uint64_t(monte_carlo));
      csv << "," << fmt17(mc_classical * pt.p) << "," << fmt17(mc_quantum * pt.p);
    }
    csv << "\n";
    ++row;
  }
  write_output(ctx.config.output_path, csv.str());
}

}  // namespace

int execute(const std::vector<std::string>& args) {
  CLI::App app{
      "Deutsch-Jozsa simulation toolkit: one-clean-qubit (DQC1) and pure-register "
      "(DQCp) runs, diagonal-unitary synthesis, correlation analysis and decision "
      "error curves.\n\n"
      "Reproducibility: every randomized sweep derives the stream for run i as "
      "mt19937_64(seed + i), so a fixed --seed and flags give byte-identical output."};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  app.add_option("--config", config_path, "key=value config file (overrides DJSIM_CONFIG)");
  app.add_option("--seed", seed, "master RNG seed")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_option("--out", out_path, "output file (default: stdout)");

  // dqc1 run
  auto* dqc1 = app.add_subcommand("dqc1", "one-clean-qubit model");
  dqc1->require_subcommand(1);
  auto* dqc1_run = dqc1->add_subcommand("run", "run the circuit and report readout statistics");
  std::string dqc1_oracle;
  double dqc1_alpha = 1.0;
  dqc1_run->add_option("--oracle-file", dqc1_oracle, "truth-table file (one line of 0/1)")
      ->required();
  dqc1_run->add_option("--alpha", dqc1_alpha, "control-qubit polarization in [0,1]");

  // dqcp sweep
  auto* dqcp = app.add_subcommand("dqcp", "pure-register model");
  dqcp->require_subcommand(1);
  auto* dqcp_sweep = dqcp->add_subcommand("sweep", "max negativity over random balanced oracles");
  int n_min = 1, n_max = 10, samples = 50;
  dqcp_sweep->add_option("--n-min", n_min, "smallest register size");
  dqcp_sweep->add_option("--n-max", n_max, "largest register size");
  dqcp_sweep->add_option("--samples", samples, "random balanced functions per size");

  // synth emit
  auto* synth = app.add_subcommand("synth", "diagonal-unitary synthesis");
  synth->require_subcommand(1);
  auto* synth_emit = synth->add_subcommand("emit", "compile the controlled oracle to a netlist");
  std::string synth_oracle, netlist_out;
  bool synth_verify = false;
  synth_emit->add_option("--oracle-file", synth_oracle, "truth-table file")->required();
  synth_emit->add_option("--netlist-out", netlist_out, "netlist output file");
  synth_emit->add_flag("--verify", synth_verify, "check the circuit against the oracle");

  // trace
  auto* trace = app.add_subcommand("trace", "per-gate correlation reports");
  std::string trace_oracle, trace_model = "dqc1";
  double trace_alpha = 1.0;
  trace->add_option("--oracle-file", trace_oracle, "truth-table file")->required();
  trace->add_option("--model", trace_model, "dqc1 or dqcp")
      ->check(CLI::IsMember({"dqc1", "dqcp"}));
  trace->add_option("--alpha", trace_alpha, "polarization (dqc1 model)");

  // nmr discord-trace
  auto* nmr = app.add_subcommand("nmr", "effective-Hamiltonian sequence");
  nmr->require_subcommand(1);
  auto* nmr_trace = nmr->add_subcommand("discord-trace", "discord after each term");

  // perr
  auto* perr = app.add_subcommand("perr", "decision error-probability curves");
  int k_max = 10, monte_carlo = 0;
  double prior = 0.5;
  std::vector<int> ns;
  perr->add_option("--k-max", k_max, "largest measurement count");
  perr->add_option("--n", ns, "comma-separated register sizes")->delimiter(',');
  perr->add_option("--p", prior, "prior probability of a balanced function");
  perr->add_option("--monte-carlo", monte_carlo, "also estimate the errors from this many trials");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommandContext ctx;
    ctx.config = config_from_environment();
    if (!config_path.empty()) ctx.config = load_config_file(config_path, ctx.config);
    if (seed_given) ctx.config.seed = seed;
    if (!out_path.empty()) ctx.config.output_path = out_path;
    ctx.config.validate();

    if (dqc1_run->parsed()) {
      run_dqc1_command(ctx, dqc1_oracle, dqc1_alpha);
    } else if (dqcp_sweep->parsed()) {
      run_dqcp_sweep(ctx, n_min, n_max, samples);
    } else if (synth_emit->parsed()) {
      run_synth_emit(ctx, synth_oracle, netlist_out, synth_verify);
    } else if (trace->parsed()) {
      run_trace(ctx, trace_oracle, trace_model, trace_alpha);
    } else if (nmr_trace->parsed()) {
      run_nmr_trace(ctx);
    } else if (perr->parsed()) {
      run_perr(ctx, k_max, ns, prior, monte_carlo);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int execute(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return execute(args);
}

}  // namespace djsim::cli
