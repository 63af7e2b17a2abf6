#include "xywave/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace xyw {

namespace {

// Downward (Miller) recurrence from well above the turning point, normalized
// with J_0 + 2*sum_{k even} J_2k = 1. Rescales on the fly to avoid overflow.
std::vector<double> miller_sequence(int n_max, double x) {
  std::vector<double> seq(n_max + 1, 0.0);
  if (x < 1e-200) {
    seq[0] = 1.0;
    if (n_max >= 1) seq[1] = 0.5 * x;
    return seq;
  }
  const int turn = (int)std::ceil(x);
  const int start = std::max(n_max, turn) + 40 +
                    (int)std::ceil(8.0 * std::cbrt(std::max(1.0, x)));
  double jp = 0.0;    // J_{k+1}, unnormalized
  double jc = 1e-30;  // J_k
  double sum = 0.0;
  for (int k = start; k >= 1; --k) {
    const double jm = (2.0 * k / x) * jc - jp;
    jp = jc;
    jc = jm;  // J_{k-1}
    const int idx = k - 1;
    if (idx <= n_max) seq[idx] = jc;
    if (idx == 0)
      sum += jc;
    else if (idx % 2 == 0)
      sum += 2.0 * jc;
    if (std::abs(jc) > 1e250) {
      constexpr double s = 1e-250;
      jc *= s;
      jp *= s;
      sum *= s;
      for (double& v : seq) v *= s;
    }
  }
  const double scale = 1.0 / sum;
  for (double& v : seq) v *= scale;
  return seq;
}

}  // namespace

double bessel_j(long n, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j: x must be finite");
  if (std::labs(n) > 1000000L)
    throw std::invalid_argument("bessel_j: |order| capped at 1e6");
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    if (n & 1L) sign = -sign;
  }
  if (n < 0) {
    n = -n;
    if (n & 1L) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n >= 1) {
    // |J_n(x)| <= (x/2)^n / n! * exp(x^2/4); skip the recurrence when the
    // bound is below the smallest normal double.
    const double logbound = n * std::log(0.5 * x) - std::lgamma((double)n + 1.0) +
                            0.25 * x * x;
    if (logbound < -709.0) return 0.0;
  }
  return sign * miller_sequence((int)n, x)[n];
}

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("bessel_j_sequence: n_max must be >= 0");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::invalid_argument("bessel_j_sequence: x must be finite and >= 0");
  if (x == 0.0) {
    std::vector<double> seq(n_max + 1, 0.0);
    seq[0] = 1.0;
    return seq;
  }
  return miller_sequence(n_max, x);
}

}  // namespace xyw
