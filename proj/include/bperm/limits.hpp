#pragma once

#include <cstdint>

namespace bperm {

// Resource guards for the exponential-cost operations.  Each limit maps to a
// specific blow-up: octant loops are 2^n, oracle normal tables are 3^n,
// subset-union tables are 2^m, and the box scan visits every integer point of
// the bounding box.  Exceeding a guard raises a guard-class Error (exit code 2
// in the CLI) rather than silently attempting the computation.
struct Limits {
  int max_formula_dim = 16;           // 2^n octant enumeration
  int max_oracle_dim = 8;             // 3^n - 1 support normals, box scans
  int max_terms = 20;                 // 2^m union-cardinality table
  std::int64_t max_box_points = 50'000'000;   // lattice scan volume
  std::int64_t max_multisets = 5'000'000;     // transversal multiset loop
  std::int64_t max_forest_products = 5'000'000;  // forest count accumulator
};

}  // namespace bperm
