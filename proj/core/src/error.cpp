#include "fixinv/error.hpp"

#include "fixinv/extended.hpp"

namespace fixinv {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::input: return "input";
    case Stage::specfun: return "specfun";
    case Stage::forward: return "forward_solver";
    case Stage::liouville: return "liouville";
    case Stage::spectral_data: return "spectral_data";
    case Stage::moment_solver: return "moment_solver";
    case Stage::gl: return "gl_reconstruction";
    case Stage::bound_states: return "bound_states";
    case Stage::tuning: return "tuning";
  }
  return "unknown";
}

std::string_view to_string(Failure failure) {
  switch (failure) {
    case Failure::pole: return "pole";
    case Failure::tan_overflow: return "tan_overflow";
    case Failure::singular_moment: return "singular_moment";
    case Failure::degenerate_nodes: return "degenerate_nodes";
    case Failure::indeterminate: return "indeterminate";
    case Failure::non_convergence: return "non_convergence";
    case Failure::coalescing: return "coalescing";
    case Failure::non_unique: return "non_unique";
    case Failure::grid_too_small: return "grid_too_small";
    case Failure::degenerate_residue: return "degenerate_residue";
    case Failure::integration: return "integration";
    case Failure::search_failed: return "search_failed";
  }
  return "unknown";
}

Error::Error(Stage stage, const std::string& message)
    : std::runtime_error("[" + std::string(to_string(stage)) + "] " + message),
      stage_(stage),
      message_(message) {}

ParseError::ParseError(int line, const std::string& message)
    : DomainError(Stage::input, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

NumericalError::NumericalError(Stage stage, Failure failure,
                               const std::string& message,
                               std::string diagnostics)
    : Error(stage, std::string(to_string(failure)) + ": " + message),
      failure_(failure),
      diagnostics_(std::move(diagnostics)) {}

Extended tgamma_ext(const Extended& x) {
  return boost::multiprecision::tgamma(x);
}

}  // namespace fixinv
