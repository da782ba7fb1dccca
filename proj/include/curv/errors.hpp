#ifndef CURV_ERRORS_HPP
#define CURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curv {

// Bad shapes, bad arguments, malformed input files. Maps to CLI exit 3.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime numerical failure (non-finite values, failed iteration). CLI exit 4.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Metric not positive definite where one was required.
struct DegenerateMetricError : NumericalError {
  explicit DegenerateMetricError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace curv

#endif
