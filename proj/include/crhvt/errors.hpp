#pragma once

#include <stdexcept>
#include <string>

namespace crhvt {

// Thrown when a computation produces values that make continuing meaningless
// (NaN in a matrix update, negative quadratic form, failed bracketing).
// Callers running experiments abort the run and record the failing round.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crhvt
