#include "support/reference.hpp"

#include <algorithm>
#include <cmath>

#include "djsim/correlations.hpp"
#include "djsim/simulate.hpp"

namespace djsim::testing {

Matrix oracle_matrix_direct(const OracleFunction& f) {
  const Eigen::Index dim = Eigen::Index(1) << f.n;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    u(j, j) = f.truth_table[j] ? -1.0 : 1.0;
  }
  return u;
}

Matrix controlled_oracle_matrix_direct(const OracleFunction& f) {
  const Eigen::Index dim = Eigen::Index(1) << f.n;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return kron(p0, Matrix::Identity(dim, dim)) + kron(p1, oracle_matrix_direct(f));
}

DensityMatrix eq3_state_direct(const OracleFunction& f, double alpha) {
  const int m = f.n + 1;
  const Eigen::Index dim = Eigen::Index(1) << f.n;
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const Matrix rho = (kron(Matrix::Identity(2, 2), Matrix::Identity(dim, dim)) +
                      alpha * kron(x, oracle_matrix_direct(f))) /
                     double(Eigen::Index(1) << m);
  return DensityMatrix(m, rho);
}

DensityMatrix eq4_state_direct(const OracleFunction& f, double alpha) {
  const int m = f.n + 1;
  const Eigen::Index dim = Eigen::Index(1) << f.n;
  const double phi = std::asin(alpha) / 2.0;
  Matrix rho = Matrix::Zero(Eigen::Index(1) << m, Eigen::Index(1) << m);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double sign = f.truth_table[j] ? -1.0 : 1.0;
    Vector a(2), b(2);
    a << std::cos(phi), sign * std::sin(phi);
    b << std::sin(phi), sign * std::cos(phi);
    Matrix block = a * a.adjoint() + b * b.adjoint();
    Matrix proj = Matrix::Zero(dim, dim);
    proj(j, j) = 1.0;
    rho += kron(block, proj);
  }
  rho /= double(Eigen::Index(1) << m);
  return DensityMatrix(m, rho);
}

DensityMatrix eq5_state_direct(const OracleFunction& f) {
  const int m = f.n + 1;
  const Eigen::Index dim = Eigen::Index(1) << f.n;
  Matrix rho = Matrix::Zero(Eigen::Index(1) << m, Eigen::Index(1) << m);
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double sign = f.truth_table[j] ? -1.0 : 1.0;
    Vector v(2);
    v << s, sign * s;
    Matrix proj = Matrix::Zero(dim, dim);
    proj(j, j) = 1.0;
    rho += kron(Matrix(v * v.adjoint()), proj) / double(dim);
  }
  return DensityMatrix(m, rho);
}

namespace {

// Counts ordered tuples of distinct inputs with all-equal f values.
void count_tuples(const std::vector<uint8_t>& table, std::vector<bool>& used, int depth, int k,
                  int value, long long& equal, long long& total) {
  if (depth == k) {
    ++total;
    ++equal;
    return;
  }
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    if (depth == 0 || table[j] == value) {
      count_tuples(table, used, depth + 1, k, depth == 0 ? table[j] : value, equal, total);
    } else {
      // The tuple diverged; everything below contributes only to the total.
      long long remaining = 1;
      for (int d = depth + 1; d < k; ++d) remaining *= (long long)(table.size() - d);
      total += remaining;
    }
    used[j] = false;
  }
}

}  // namespace

double brute_force_same_outcome_probability(int k, int n) {
  std::vector<uint8_t> table(std::size_t(1) << n, 0);
  std::fill(table.begin() + table.size() / 2, table.end(), uint8_t(1));
  std::vector<bool> used(table.size(), false);
  long long equal = 0, total = 0;
  count_tuples(table, used, 0, k, 0, equal, total);
  return double(equal) / double(total);
}

double negativity_pure_via_reduced_state(const PureState& psi, const Bipartition& part) {
  const DensityMatrix reduced = partial_trace(DensityMatrix::from_pure(psi), part);
  const RealVector values = hermitian_eigenvalues(reduced.matrix());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > 0.0) sum += std::sqrt(values[i]);
  }
  return (sum * sum - 1.0) / 2.0;
}

PureState random_pure(int m, Rng& rng) {
  const Eigen::Index dim = Eigen::Index(1) << m;
  Vector amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    // Box-Muller from two uniform draws.
    const double u1 = std::max(rng.uniform_unit(), 1e-300);
    const double u2 = rng.uniform_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    amps[i] = Complex(r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2));
  }
  amps /= amps.norm();
  return PureState(m, std::move(amps));
}

DensityMatrix random_density(int m, Rng& rng) {
  const Eigen::Index dim = Eigen::Index(1) << m;
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double u1 = std::max(rng.uniform_unit(), 1e-300);
      const double u2 = rng.uniform_unit();
      const double rad = std::sqrt(-2.0 * std::log(u1));
      g(r, c) = Complex(rad * std::cos(2.0 * kPi * u2), rad * std::sin(2.0 * kPi * u2));
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + Matrix(rho.adjoint())) / 2.0;  // scrub rounding asymmetry
  return DensityMatrix(m, std::move(rho));
}

Matrix random_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double u1 = std::max(rng.uniform_unit(), 1e-300);
      const double u2 = rng.uniform_unit();
      const double rad = std::sqrt(-2.0 * std::log(u1));
      g(r, c) = Complex(rad * std::cos(2.0 * kPi * u2), rad * std::sin(2.0 * kPi * u2));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

std::vector<OracleFunction> all_constant_and_balanced(int n) {
  const std::size_t len = std::size_t(1) << n;
  std::vector<OracleFunction> out;
  std::vector<uint8_t> table(len, 0);
  out.push_back(classify(table));  // constant 0
  std::fill(table.begin(), table.end(), uint8_t(1));
  out.push_back(classify(table));  // constant 1
  // All tables with exactly half ones via bitmask enumeration.
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << len); ++mask) {
    if (std::popcount(mask) != int(len / 2)) continue;
    for (std::size_t j = 0; j < len; ++j) table[j] = (mask >> j) & 1;
    out.push_back(classify(table));
  }
  return out;
}

}  // namespace djsim::testing
