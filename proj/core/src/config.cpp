#include "fixinv/config.hpp"

#include <cmath>

#include "fixinv/error.hpp"

namespace fixinv {

const char* to_string(BsMode m) {
  switch (m) {
    case BsMode::zero: return "zero";
    case BsMode::one: return "one";
    case BsMode::multi: return "multi";
  }
  return "unknown";
}

BsMode parse_bs_mode(const std::string& s) {
  if (s == "zero" || s == "0") return BsMode::zero;
  if (s == "one" || s == "1") return BsMode::one;
  if (s == "multi") return BsMode::multi;
  throw DomainError(Stage::input, "unknown bound-state mode '" + s + "' (zero|one|multi)");
}

void InversionConfig::validate() const {
  auto bad = [](const std::string& m) { throw DomainError(Stage::input, m); };
  if (!(c < 0.0) || !std::isfinite(c)) bad("c must be negative");
  if (!std::isfinite(h)) bad("h must be finite");
  if (n_phases == 0) bad("n_phases must be positive (or negative for all)");
  if (mode == BsMode::multi) {
    if (initial_lambdas.empty() && bs_count < 2) bad("multi mode needs bs_count >= 2");
    if (!initial_lambdas.empty() && initial_lambdas.size() < 2) {
      bad("multi mode needs at least two initial lambdas");
    }
  }
  if (!(r_min_fraction > 0.0 && r_min_fraction < 1.0)) bad("r_min fraction must lie in (0, 1)");
  if (!(r0 >= 0.0)) bad("r0 must be non-negative");
  if (!(gl_step_fraction > 0.0 && gl_step_fraction <= 0.5)) bad("gl step fraction must lie in (0, 0.5]");
  if (trial_lambdas) {
    if (!(trial_lambdas->first < 0.0 && trial_lambdas->second < 0.0) ||
        trial_lambdas->first == trial_lambdas->second) {
      bad("trial lambdas must be distinct and negative");
    }
  }
  for (double l : initial_lambdas) {
    if (!(l < 0.0)) bad("initial lambdas must be negative");
  }
}

}  // namespace fixinv
