// Correlation quantifiers: entropies, mutual information, negativity,
// one-sided quantum discord and a product-basis classicality test.
//
// All entropies and the discord are in bits (base-2 logarithms).

#pragma once

#include <cstdint>
#include <utility>

#include "djsim/simulate.hpp"

namespace djsim {

/// -sum lambda log2 lambda over the eigenvalues, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(A) + S(B) - S(AB) across the bipartition.
double mutual_information(const DensityMatrix& rho, const Bipartition& part);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix& rho, const Bipartition& part);

/// Pure-state negativity from Schmidt coefficients: ((sum s_i)^2 - 1)/2.
/// Bounded by (2^s - 1)/2 with s the smaller partition size.
double negativity_pure(const PureState& psi, const Bipartition& part);

/// Projective single-qubit measurement direction on the Bloch sphere:
/// |v> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and its orthogonal
/// complement.
struct MeasurementBasis {
  double theta = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // azimuthal angle in [0, 2 pi)

  Vector state_vector() const;
  Vector orthogonal_vector() const;
  std::pair<Matrix, Matrix> projectors() const;
};

struct DiscordOptions {
  int grid_theta = 32;          // coarse grid points over theta in [0, pi]
  int grid_phi = 64;            // coarse grid points over phi in [0, 2 pi)
  double refine_step_tol = 1e-7;  // pattern-search step below which we stop
  double zero_clamp = 1e-8;     // values within this of zero report as 0
};

/// One-sided quantum discord with projective measurements on a single
/// qubit: I(rho) - max_basis [S(rho_rest) - sum_i p_i S(rho_rest | i)].
/// The maximization runs a coarse grid followed by local pattern-search
/// refinement; the result is clamped to 0 when within zero_clamp of zero.
double discord(const DensityMatrix& rho, int measured_qubit,
               const DiscordOptions& opts = {});

struct ClassicalityOptions {
  double tol = 1e-8;          // residual below which the state is classical
  int starts = 20;            // multi-start count for the optimization
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;  // start-point stream
  int nm_max_iters = 600;     // Nelder-Mead iteration cap per start
};

struct ClassicalityResult {
  bool classical = false;
  double residual = 0.0;  // smallest off-diagonal Frobenius norm found
};

/// Searches for a product basis (one rotation per qubit) in which rho is
/// diagonal, minimizing the off-diagonal Frobenius norm by multi-start
/// local optimization. A `true` verdict is certified by the residual; a
/// `false` verdict is heuristic (the optimizer may miss the global
/// minimum, though in practice it does not for the states handled here).
ClassicalityResult is_classical(const DensityMatrix& rho,
                                const ClassicalityOptions& opts = {});

/// Bundle of correlation values across one bipartition. `discord` is only
/// evaluated when one side is a single qubit (that side is measured).
struct CorrelationValues {
  double negativity = 0.0;
  double discord = 0.0;
  int measured_qubit = -1;  // -1 when no single-qubit side exists
  double mutual_information = 0.0;
  bool classical = false;   // full-state product-basis diagonalizability
  double residual = 0.0;
};

CorrelationValues compute_correlations(const DensityMatrix& rho, const Bipartition& part,
                                       const DiscordOptions& discord_opts = {},
                                       const ClassicalityOptions& classical_opts = {});

}  // namespace djsim
