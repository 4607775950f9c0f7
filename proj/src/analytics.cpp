#include "djsim/analytics.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace djsim {

namespace {

using BigInt = boost::multiprecision::cpp_int;

double big_ratio(BigInt num, BigInt den) {
  // Shift both down so the conversion to double cannot overflow; the
  // discarded bits are far below double precision.
  const std::size_t bits = std::max(msb(num), msb(den));
  if (bits > 900) {
    const unsigned shift = static_cast<unsigned>(bits - 900);
    num >>= shift;
    den >>= shift;
  }
  return num.convert_to<double>() / den.convert_to<double>();
}

}  // namespace

double g(int k, int n) {
  if (k < 2) throw std::invalid_argument("g: k must be >= 2");
  if (n < 1) throw std::invalid_argument("g: n must be >= 1");

  const BigInt half = BigInt(1) << (n - 1);
  const BigInt full = BigInt(1) << n;
  if (BigInt(k) > half) return 0.0;  // some factor hits zero

  BigInt num = 1, den = 1;
  for (int i = 1; i <= k - 1; ++i) {
    num *= half - i;
    den *= full - i;
  }
  if (num == 0) return 0.0;
  return big_ratio(num, den);
}

double p_err_classical(int k, int n, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p_err_classical: p must be in [0,1]");
  return g(k, n) * p;
}

double p_err_quantum(int k, double p) {
  if (k < 2) throw std::invalid_argument("p_err_quantum: k must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p_err_quantum: p must be in [0,1]");
  return p * std::pow(2.0, -(k - 1));
}

std::vector<ErrorCurvePoint> perr_curve(int k_max, const std::vector<int>& n_list, double p) {
  if (k_max < 2) throw std::invalid_argument("perr_curve: k_max must be >= 2");
  std::vector<ErrorCurvePoint> points;
  points.reserve(std::size_t(k_max - 1) * n_list.size());
  for (int k = 2; k <= k_max; ++k) {
    for (int n : n_list) {
      ErrorCurvePoint pt;
      pt.k = k;
      pt.n = n;
      pt.p = p;
      pt.p_err_classical = p_err_classical(k, n, p);
      pt.p_err_quantum = p_err_quantum(k, p);
      points.push_back(pt);
    }
  }
  return points;
}

}  // namespace djsim
