#pragma once

#include <stdexcept>
#include <string>

namespace actdyn {

/// Malformed or inconsistent input (bad files, dangling references, empty data).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: non-convergence, divergence, unidentifiable parameters.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace actdyn
