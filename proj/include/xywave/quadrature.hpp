#ifndef XYWAVE_QUADRATURE_HPP
#define XYWAVE_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace xyw {

// Composite Gauss-Legendre rule on [0, pi] with panel doubling until the
// relative tolerance is met. node_count is the initial node budget; callers
// with oscillatory integrands pass a hint (~ lambda*t + |x|) that raises it.
struct Quadrature {
  int node_count = 64;
  double tolerance = 1e-10;
};

// Gauss-Legendre nodes/weights on [-1, 1] for the given order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

// Integral of f over [0, pi]. Throws ConvergenceError if doubling exhausts
// its budget before |I_2N - I_N| <= tol * (1 + |I_2N|).
double integrate(const std::function<double(double)>& f, const Quadrature& q,
                 double oscillation_hint = 0.0);

// Same, but splitting [0, pi] at the given interior breakpoints so each
// smooth piece converges independently.
double integrate(const std::function<double(double)>& f, const Quadrature& q,
                 double oscillation_hint, std::span<const double> breakpoints);

}  // namespace xyw

#endif  // XYWAVE_QUADRATURE_HPP
