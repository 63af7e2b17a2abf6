#ifndef XYWAVE_ERRORS_HPP
#define XYWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xyw {

// Raised when the composite quadrature fails to meet its tolerance within
// the panel-doubling budget (integrand too oscillatory for the hint given).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a density matrix violates positivity beyond the clip threshold.
class PsdError : public std::runtime_error {
 public:
  explicit PsdError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyw

#endif  // XYWAVE_ERRORS_HPP
