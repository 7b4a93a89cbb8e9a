#include "bperm/errors.hpp"

namespace bperm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_set: return "empty set";
    case Errc::out_of_range: return "out of range";
    case Errc::not_admissible: return "not admissible";
    case Errc::duplicate_entry: return "duplicate entry";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::negative_coefficient: return "negative coefficient";
    case Errc::dimension_too_large: return "dimension too large";
    case Errc::too_many_terms: return "too many terms";
    case Errc::box_too_large: return "box too large";
    case Errc::multiset_explosion: return "multiset explosion";
    case Errc::not_square: return "not square";
    case Errc::not_forest: return "not forest";
    case Errc::length_mismatch: return "length mismatch";
    case Errc::parse_error: return "parse error";
    case Errc::unsupported_dimension: return "unsupported dimension";
  }
  return "unknown error";
}

bool is_guard_error(Errc code) {
  switch (code) {
    case Errc::dimension_too_large:
    case Errc::too_many_terms:
    case Errc::box_too_large:
    case Errc::multiset_explosion:
      return true;
    default:
      return false;
  }
}

}  // namespace bperm
