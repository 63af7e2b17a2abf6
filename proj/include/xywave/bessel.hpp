#ifndef XYWAVE_BESSEL_HPP
#define XYWAVE_BESSEL_HPP

#include <vector>

namespace xyw {

// Bessel function of the first kind of integer order. Negative orders use
// J_{-n}(x) = (-1)^n J_n(x), negative arguments J_n(-x) = (-1)^n J_n(x).
// Absolute accuracy ~1e-13 (Miller downward recurrence with sum
// normalization).
double bessel_j(long n, double x);

// J_0(x) .. J_{n_max}(x) from one downward-recurrence pass.
std::vector<double> bessel_j_sequence(int n_max, double x);

}  // namespace xyw

#endif  // XYWAVE_BESSEL_HPP
