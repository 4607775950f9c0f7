// Closed-form efficiency analysis of the constant-vs-balanced decision.

#pragma once

#include <vector>

namespace djsim {

/// Probability that k distinct inputs of a balanced n-bit function all give
/// the same output:
///   g(k,n) = prod_{i=1..k-1} (2^{n-1} - i) / (2^n - i),
/// evaluated as an exact integer ratio before the final division. Returns 0
/// for k > 2^{n-1} (pigeonhole). Requires k >= 2, n >= 1.
double g(int k, int n);

/// g(k,n) * p — the erroneous-constant probability of the classical
/// sampling procedure with prior p of the function being balanced.
double p_err_classical(int k, int n, double p);

/// p / 2^{k-1} — the same error probability for the quantum procedure,
/// independent of n.
double p_err_quantum(int k, double p);

struct ErrorCurvePoint {
  int k = 0;
  int n = 0;
  double p = 0.0;
  double p_err_classical = 0.0;
  double p_err_quantum = 0.0;
};

/// Points for k = 2..k_max and every n in n_list. The classical value never
/// exceeds the quantum one and approaches it as n grows.
std::vector<ErrorCurvePoint> perr_curve(int k_max, const std::vector<int>& n_list, double p);

}  // namespace djsim
