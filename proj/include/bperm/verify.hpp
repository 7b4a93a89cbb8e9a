#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bperm/expression.hpp"
#include "bperm/limits.hpp"

namespace bperm {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // empty on success, explanation on failure
};

struct VerifyOptions {
  unsigned trials = 0;         // additional random instances
  std::uint64_t seed = 42;     // drives the random instances and spot checks
  Limits limits;
};

// The cross-check battery for one instance: the closed-form counts against
// each other, the Ehrhart/volume identities, representation invariance, and
// (for nonnegative coefficients) everything against the brute-force oracle.
// Negative-coefficient instances run the formula-only subset.
std::vector<CheckResult> verify_expression(const MinkowskiExpression& p,
                                           const VerifyOptions& options = {});

// Battery over the input plus `options.trials` random instances drawn with
// the same dimension; check names are prefixed "trial<k>/".
std::vector<CheckResult> run_verification(const MinkowskiExpression& p,
                                          const VerifyOptions& options = {});

// A random instance: m in [1, max_terms] sets drawn uniformly among nonempty
// admissible subsets, coefficients in [1, max_coeff].
MinkowskiExpression random_expression(std::mt19937_64& rng, int n, int max_terms,
                                      int max_coeff);

}  // namespace bperm
