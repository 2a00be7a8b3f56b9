#ifndef SCC_ERRORS_HPP_
#define SCC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace scc {

// Malformed arguments: bad cuts, violated generator constraints, schema errors.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No subset of the links covers the small-cuts family.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to run past its configured size limit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scc

#endif  // SCC_ERRORS_HPP_
