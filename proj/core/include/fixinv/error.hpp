#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixinv {

/// Pipeline stage that raised an error. Carried by every exception so that
/// failures from `reconstruct` can be attributed.
enum class Stage {
  input,
  specfun,
  forward,
  liouville,
  spectral_data,
  moment_solver,
  gl,
  bound_states,
  tuning,
};

std::string_view to_string(Stage stage);

class Error : public std::runtime_error {
 public:
  Error(Stage stage, const std::string& message);
  Stage stage() const noexcept { return stage_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Stage stage_;
  std::string message_;
};

/// Arguments outside an operation's contract, or malformed input data.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class Failure {
  pole,
  tan_overflow,
  singular_moment,
  degenerate_nodes,
  indeterminate,
  non_convergence,
  coalescing,
  non_unique,
  grid_too_small,
  degenerate_residue,
  integration,
  search_failed,
};

std::string_view to_string(Failure failure);

/// A computation that was well posed but could not be completed numerically.
class NumericalError : public Error {
 public:
  NumericalError(Stage stage, Failure failure, const std::string& message,
                 std::string diagnostics = {});
  Failure failure() const noexcept { return failure_; }
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  Failure failure_;
  std::string diagnostics_;
};

}  // namespace fixinv
