#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hopf {

// Every failure carries the module that raised it and, when meaningful, the
// degree at which it happened. The CLI maps the concrete type to an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string what, std::optional<int> degree = std::nullopt)
      : std::runtime_error(compose(module, what, degree)),
        module_(std::move(module)),
        degree_(degree) {}

  const std::string& module() const noexcept { return module_; }
  std::optional<int> degree() const noexcept { return degree_; }

 private:
  static std::string compose(const std::string& module, const std::string& what,
                             std::optional<int> degree) {
    std::string s = "[" + module + "] " + what;
    if (degree) s += " (degree " + std::to_string(*degree) + ")";
    return s;
  }

  std::string module_;
  std::optional<int> degree_;
};

// Operands do not fit together: different fields, bounds, shapes.
class StructuralError : public Error {
  using Error::Error;
};

// A precondition on the values themselves failed.
class DomainError : public Error {
  using Error::Error;
};

// The answer would need data above the truncation bound.
class TruncationError : public Error {
  using Error::Error;
};

// A user-supplied presentation or document is malformed.
class ValidationError : public Error {
  using Error::Error;
};

// Something that a theorem guarantees did not happen. Never expected.
class InvariantViolation : public Error {
  using Error::Error;
};

// A search ran out of candidates or budget.
class SearchFailure : public Error {
  using Error::Error;
};

}  // namespace hopf
