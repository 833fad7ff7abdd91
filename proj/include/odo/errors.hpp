#pragma once

#include <stdexcept>
#include <string>

namespace odo {

// Violated precondition or type invariant (dimension mismatch, bad simplex
// point, index out of range, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Configuration or input-file problems surfaced to the CLI user.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV loading failure; message carries a line/column diagnostic.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) {
    throw ContractViolation(message);
  }
}

}  // namespace odo
