#pragma once

#include <string>

#include "bperm/expression.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm {

// Instance files are single JSON documents:
//   {"n": 2, "terms": [{"set": [1,2], "coeff": 2}, {"set": [-2], "coeff": 1}]}
// Signed indices use negative integers for reflected directions.  Errors are
// reported with the offending field path, e.g. "terms[1].set: ...".
MinkowskiExpression parse_instance(const std::string& json_text);
MinkowskiExpression load_instance(const std::string& path);

// Canonical single-line serialization; parse(serialize(P)) == P.
std::string serialize_instance(const MinkowskiExpression& p);

// 16-hex-digit FNV-1a digest of the canonical serialization.
std::string instance_digest(const MinkowskiExpression& p);

// Compact octant spellings: {1,-2} <-> "+1-2".
std::string octant_token(const OctantLabel& t);

// Parses "--octant" arguments: comma-separated signed coordinates, e.g.
// "1,-2" or "+1,-2".
OctantLabel parse_octant_arg(const std::string& text, int n);

}  // namespace bperm
