#pragma once

#include <stdexcept>
#include <string>

namespace musurf {

// Structured failure codes surfaced by the geometry layers. The CLI maps
// these onto process exit codes.
enum class Errc {
  invalid_input,
  invalid_surface,
  common_component,
  non_isolated,
  non_isolated_fiber,
  genericity_failure,
  hypothesis_violated,
  not_following,
  elimination_not_principal,
  degree_bound_exhausted,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "INVALID_INPUT";
    case Errc::invalid_surface: return "INVALID_SURFACE";
    case Errc::common_component: return "COMMON_COMPONENT";
    case Errc::non_isolated: return "NON_ISOLATED";
    case Errc::non_isolated_fiber: return "NON_ISOLATED_FIBER";
    case Errc::genericity_failure: return "GENERICITY_FAILURE";
    case Errc::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    case Errc::not_following: return "NOT_FOLLOWING";
    case Errc::elimination_not_principal: return "ELIMINATION_NOT_PRINCIPAL";
    case Errc::degree_bound_exhausted: return "DEGREE_BOUND_EXHAUSTED";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace musurf
