#include "djsim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "djsim/rng.hpp"

namespace djsim {

namespace {

double entropy_of_eigenvalues(const RealVector& values) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double lambda = values[i];
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

// Entropy of a Hermitian PSD matrix given with its trace possibly != 1;
// normalized internally. Small negative eigenvalues from rounding count
// as zero.
double entropy_unnormalized(const Matrix& m, double trace) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i] / trace;
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

// --- small derivative-free optimizers -------------------------------------

// Compass pattern search in 2D; returns the best point found.
template <typename F>
double pattern_search_2d(F&& f, double& x, double& y, double step_x, double step_y,
                         double step_tol) {
  double best = f(x, y);
  while (step_x > step_tol || step_y > step_tol) {
    bool improved = false;
    const double cand[4][2] = {
        {x + step_x, y}, {x - step_x, y}, {x, y + step_y}, {x, y - step_y}};
    for (const auto& c : cand) {
      const double v = f(c[0], c[1]);
      if (v < best) {
        best = v;
        x = c[0];
        y = c[1];
        improved = true;
      }
    }
    if (!improved) {
      step_x /= 2.0;
      step_y /= 2.0;
    }
  }
  return best;
}

// Nelder-Mead simplex minimization.
double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                   std::vector<double>& x, double initial_step, int max_iters) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> pts(n + 1, x);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 1; i <= n; ++i) pts[i][i - 1] += initial_step;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<std::size_t> order(n + 1);
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];
    if (vals[worst] - vals[best] < 1e-15) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / double(n);
    }
    auto blend = [&](double coef) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) {
        p[k] = centroid[k] + coef * (pts[worst][k] - centroid[k]);
      }
      return p;
    };

    std::vector<double> reflected = blend(-1.0);
    const double fr = f(reflected);
    if (fr < vals[order[0]]) {
      std::vector<double> expanded = blend(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[worst] = std::move(expanded);
        vals[worst] = fe;
      } else {
        pts[worst] = std::move(reflected);
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = std::move(reflected);
      vals[worst] = fr;
    } else {
      std::vector<double> contracted = blend(fr < vals[worst] ? -0.5 : 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = std::move(contracted);
        vals[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) {
            pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
          }
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (vals[i] < vals[best]) best = i;
  }
  x = pts[best];
  return vals[best];
}

// Golden-section line minimization of f along coordinate k.
double golden_polish(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double>& x, std::size_t k, double radius, double tol) {
  const double gr = 0.6180339887498949;
  double a = x[k] - radius, b = x[k] + radius;
  std::vector<double> p = x;
  auto eval = [&](double t) {
    p[k] = t;
    return f(p);
  };
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = eval(d);
    }
  }
  const double t = (fc < fd) ? c : d;
  const double ft = std::min(fc, fd);
  if (ft < f(x)) x[k] = t;
  return std::min(ft, f(x));
}

// 2x2 rotation taking the measurement basis to the computational basis:
// rows are <v| and <v_perp|.
Matrix basis_rotation(double theta, double phi) {
  Matrix u(2, 2);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  u(0, 0) = c;
  u(0, 1) = std::polar(s, -phi);
  u(1, 0) = -std::polar(s, phi);
  u(1, 1) = c;
  return u;
}

// Conjugate rho in place by the single-qubit unitary u acting on wire q.
void conjugate_single_qubit(Matrix& rho, int m, int q, const Matrix& u) {
  const Eigen::Index bit = Eigen::Index(1) << (m - 1 - q);
  const Eigen::Index dim = rho.rows();
  // Row mix: rho <- (u on q) rho
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (r & bit) continue;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Complex a = rho(r, c), b = rho(r | bit, c);
      rho(r, c) = u(0, 0) * a + u(0, 1) * b;
      rho(r | bit, c) = u(1, 0) * a + u(1, 1) * b;
    }
  }
  // Column mix: rho <- rho (u on q)^dagger
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c & bit) continue;
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Complex a = rho(r, c), b = rho(r, c | bit);
      rho(r, c) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
      rho(r, c | bit) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
    }
  }
}

double offdiag_norm(const Matrix& rho) {
  double diag_sq = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) diag_sq += std::norm(rho(i, i));
  const double total_sq = rho.squaredNorm();
  return std::sqrt(std::max(0.0, total_sq - diag_sq));
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho.matrix()));
}

double mutual_information(const DensityMatrix& rho, const Bipartition& part) {
  const DensityMatrix a = partial_trace(rho, part);
  const Bipartition complement(part.qubits(), part.side_b());
  const DensityMatrix b = partial_trace(rho, complement);
  return von_neumann_entropy(a) + von_neumann_entropy(b) - von_neumann_entropy(rho);
}

double negativity(const DensityMatrix& rho, const Bipartition& part) {
  const Matrix pt = partial_transpose(rho, part);
  const RealVector values = hermitian_eigenvalues(pt);
  double total = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) total -= values[i];
  }
  return total;
}

double negativity_pure(const PureState& psi, const Bipartition& part) {
  if (part.qubits() != psi.qubits()) {
    throw std::invalid_argument("negativity_pure: bipartition does not match state");
  }
  const int m = psi.qubits();
  const auto& a = part.side_a();
  const auto b = part.side_b();
  const Eigen::Index adim = Eigen::Index(1) << a.size();
  const Eigen::Index bdim = Eigen::Index(1) << b.size();

  Matrix reshaped(adim, bdim);
  for (Eigen::Index ia = 0; ia < adim; ++ia) {
    for (Eigen::Index ib = 0; ib < bdim; ++ib) {
      Eigen::Index j = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        j |= ((ia >> (a.size() - 1 - k)) & 1) << (m - 1 - a[k]);
      }
      for (std::size_t k = 0; k < b.size(); ++k) {
        j |= ((ib >> (b.size() - 1 - k)) & 1) << (m - 1 - b[k]);
      }
      reshaped(ia, ib) = psi.amplitudes()[j];
    }
  }
  Eigen::JacobiSVD<Matrix> svd(reshaped);
  const double sum = svd.singularValues().sum();
  return (sum * sum - 1.0) / 2.0;
}

Vector MeasurementBasis::state_vector() const {
  Vector v(2);
  v[0] = std::cos(theta / 2.0);
  v[1] = std::polar(std::sin(theta / 2.0), phi);
  return v;
}

Vector MeasurementBasis::orthogonal_vector() const {
  Vector v(2);
  v[0] = -std::polar(std::sin(theta / 2.0), -phi);
  v[1] = std::cos(theta / 2.0);
  return v;
}

std::pair<Matrix, Matrix> MeasurementBasis::projectors() const {
  const Vector v = state_vector();
  const Vector w = orthogonal_vector();
  return {v * v.adjoint(), w * w.adjoint()};
}

double discord(const DensityMatrix& rho, int measured_qubit, const DiscordOptions& opts) {
  const int m = rho.qubits();
  if (m < 2) throw std::invalid_argument("discord: need at least two qubits");
  if (measured_qubit < 0 || measured_qubit >= m) {
    throw std::out_of_range("discord: measured qubit out of range");
  }
  const Bipartition measured = Bipartition::single(m, measured_qubit);
  const double s_measured = von_neumann_entropy(partial_trace(rho, measured));
  const double s_total = von_neumann_entropy(rho);

  const Eigen::Index qbit = Eigen::Index(1) << (m - 1 - measured_qubit);
  const Eigen::Index rest_dim = rho.dim() / 2;
  auto full_index = [&](int bit, Eigen::Index rest) {
    return ((rest & ~(qbit - 1)) << 1) | (bit ? qbit : 0) | (rest & (qbit - 1));
  };

  // Conditional entropy sum_i p_i S(rho_rest | i) for measurement (theta, phi).
  auto conditional_entropy = [&](double theta, double phi) {
    const MeasurementBasis basis{theta, phi};
    double total = 0.0;
    for (const Vector& v : {basis.state_vector(), basis.orthogonal_vector()}) {
      Matrix cond(rest_dim, rest_dim);
      for (Eigen::Index x = 0; x < rest_dim; ++x) {
        for (Eigen::Index y = 0; y < rest_dim; ++y) {
          Complex sum = 0.0;
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              sum += std::conj(v[a]) * v[b] * rho.matrix()(full_index(a, x), full_index(b, y));
            }
          }
          cond(x, y) = sum;
        }
      }
      const double p = cond.trace().real();
      if (p > 1e-14) total += p * entropy_unnormalized(cond, p);
    }
    return total;
  };

  double best_theta = 0.0, best_phi = 0.0;
  double best = conditional_entropy(0.0, 0.0);
  for (int i = 0; i < opts.grid_theta; ++i) {
    const double theta = kPi * double(i) / double(opts.grid_theta - 1);
    for (int j = 0; j < opts.grid_phi; ++j) {
      const double phi = 2.0 * kPi * double(j) / double(opts.grid_phi);
      const double value = conditional_entropy(theta, phi);
      if (value < best) {
        best = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  best = pattern_search_2d(conditional_entropy, best_theta, best_phi,
                           kPi / double(opts.grid_theta - 1),
                           2.0 * kPi / double(opts.grid_phi), opts.refine_step_tol);

  // I - J = S(measured) - S(total) + min conditional entropy.
  double d = s_measured - s_total + best;
  if (d < opts.zero_clamp) d = 0.0;
  return d;
}

ClassicalityResult is_classical(const DensityMatrix& rho, const ClassicalityOptions& opts) {
  const int m = rho.qubits();
  const std::size_t dims = 2 * std::size_t(m);

  auto objective = [&](const std::vector<double>& angles) {
    Matrix rotated = rho.matrix();
    for (int q = 0; q < m; ++q) {
      conjugate_single_qubit(rotated, m, q, basis_rotation(angles[2 * q], angles[2 * q + 1]));
    }
    return offdiag_norm(rotated);
  };

  Rng rng(opts.seed);
  double best = objective(std::vector<double>(dims, 0.0));
  std::vector<double> best_angles(dims, 0.0);

  for (int start = 0; start < opts.starts; ++start) {
    std::vector<double> angles(dims);
    if (start == 0) {
      std::fill(angles.begin(), angles.end(), 0.0);
    } else {
      for (std::size_t k = 0; k < dims; ++k) {
        angles[k] = (k % 2 == 0 ? kPi : 2.0 * kPi) * rng.uniform_unit();
      }
    }
    double value = nelder_mead(objective, angles, 0.4, opts.nm_max_iters);
    // Per-coordinate polish tightens the basin the simplex landed in.
    for (int sweep = 0; sweep < 3; ++sweep) {
      for (std::size_t k = 0; k < dims; ++k) {
        value = golden_polish(objective, angles, k, 0.02, 1e-12);
      }
    }
    if (value < best) {
      best = value;
      best_angles = angles;
    }
    if (best < 0.5 * opts.tol) break;  // already certified classical
  }

  // Deep polish of the winner so a classical state reports a residual at
  // the rounding floor rather than at the search tolerance.
  if (best < opts.tol) {
    double value = best;
    for (int sweep = 0; sweep < 4; ++sweep) {
      for (std::size_t k = 0; k < dims; ++k) {
        value = golden_polish(objective, best_angles, k, 1e-4, 1e-14);
      }
    }
    best = std::min(best, value);
  }

  return {best < opts.tol, best};
}

CorrelationValues compute_correlations(const DensityMatrix& rho, const Bipartition& part,
                                       const DiscordOptions& discord_opts,
                                       const ClassicalityOptions& classical_opts) {
  CorrelationValues out;
  out.negativity = negativity(rho, part);
  out.mutual_information = mutual_information(rho, part);
  if (part.size_a() == 1) {
    out.measured_qubit = part.side_a().front();
  } else if (part.size_b() == 1) {
    out.measured_qubit = part.side_b().front();
  }
  if (out.measured_qubit >= 0) {
    out.discord = discord(rho, out.measured_qubit, discord_opts);
  }
  const ClassicalityResult cls = is_classical(rho, classical_opts);
  out.classical = cls.classical;
  out.residual = cls.residual;
  return out;
}

}  // namespace djsim
