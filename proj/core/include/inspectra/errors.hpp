#pragma once

#include <stdexcept>
#include <string>

namespace inspectra {

// Bad input data: malformed instances, unknown ids, invalid parameters.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A solver could not produce a trustworthy answer: instance over the
// enumeration guard, iteration cap hit, numerical breakdown.
// The CLI maps this to exit code 2.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace inspectra
