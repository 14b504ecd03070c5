#pragma once

#include <stdexcept>
#include <string>

namespace niho3 {

enum class Status {
  ok = 0,
  unsupported_m,
  invalid_decimation,
  not_rational_integer,
  not_in_subfield,
  zero_element,
  non_integral_result,
  non_integral_solution,
  negative_multiplicity,
  too_large,
  invalid_argument,
  internal,
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::unsupported_m: return "unsupported-m";
    case Status::invalid_decimation: return "invalid-decimation";
    case Status::not_rational_integer: return "not-rational-integer";
    case Status::not_in_subfield: return "not-in-subfield";
    case Status::zero_element: return "zero-element";
    case Status::non_integral_result: return "non-integral-result";
    case Status::non_integral_solution: return "non-integral-solution";
    case Status::negative_multiplicity: return "negative-multiplicity";
    case Status::too_large: return "too-large";
    case Status::invalid_argument: return "invalid-argument";
    case Status::internal: return "internal";
  }
  return "unknown";
}

// Every recoverable failure in the core is thrown as Error; the C API maps
// Status values onto niho3_status codes one-to-one.
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& what) {
  throw Error(status, what);
}

}  // namespace niho3
