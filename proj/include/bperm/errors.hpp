#pragma once

#include <stdexcept>
#include <string>

namespace bperm {

// Every failure the library can signal.  Guard-class codes mean "the input is
// legal but exceeds a configured resource limit"; the CLI maps those to a
// distinct exit code so scripted callers can tell them apart from bad input.
enum class Errc {
  empty_set,
  out_of_range,
  not_admissible,
  duplicate_entry,
  dimension_mismatch,
  negative_coefficient,
  dimension_too_large,
  too_many_terms,
  box_too_large,
  multiset_explosion,
  not_square,
  not_forest,
  length_mismatch,
  parse_error,
  unsupported_dimension,
};

const char* errc_name(Errc code);

// True for the resource-limit codes (dimension_too_large, too_many_terms,
// box_too_large, multiset_explosion).
bool is_guard_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bperm
