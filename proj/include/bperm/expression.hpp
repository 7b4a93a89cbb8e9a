#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bperm/numeric.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm {

// An integer point of R^n, always of length n.
using LatticePoint = std::vector<std::int64_t>;

struct Term {
  AdmissibleSubset set;
  std::int64_t coeff;
};

// A signed Minkowski combination  P = y_1 D(S_1) + ... + y_m D(S_m)  of the
// simplices D(S) = conv(0, e_s : s in S).  Coefficients may be negative (a
// formal Minkowski difference); zero-coefficient terms are dropped at
// construction and their number is remembered.
//
// Nothing here decides whether a mixed-sign combination is a genuine
// polytope; geometric operations (supports, boxes, oracles) refuse negative
// coefficients, while the counting formulas accept any integers.
class MinkowskiExpression {
 public:
  MinkowskiExpression(int n, std::vector<Term> terms);
  static MinkowskiExpression empty(int n) { return MinkowskiExpression(n, {}); }

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int dropped_zero_terms() const { return dropped_zero_terms_; }

  bool all_nonnegative() const;
  bool all_unit() const;  // every coefficient equal to 1

  // Same polytope with duplicate sets merged (coefficients summed, zeros
  // dropped) and terms in canonical set order.
  MinkowskiExpression merged() const;

  // Each term (S, y) with y >= 1 replaced by y copies of (S, 1).  Errors on
  // negative coefficients.
  MinkowskiExpression unit_expanded() const;

  // Coefficients multiplied by t >= 0 (the dilate tP).
  MinkowskiExpression dilated(std::int64_t t) const;

  std::string str() const;

 private:
  int n_;
  std::vector<Term> terms_;
  int dropped_zero_terms_ = 0;
};

// The restriction P_T = y_1 D(S_1 ∩ T) + ... + y_m D(S_m ∩ T) of an
// expression to one octant; equals P ∩ R_T as a polytope.  Empty
// intersections are kept in place (each contributes the origin) so the term
// index i still lines up with position i of a draconian sequence.
class OctantRestriction {
 public:
  OctantRestriction(const MinkowskiExpression& base, const OctantLabel& octant);

  const MinkowskiExpression& base() const { return base_; }
  const OctantLabel& octant() const { return octant_; }

  struct RestrictedTerm {
    std::vector<int> entries;  // S_i ∩ T, sorted by magnitude; may be empty
    std::int64_t coeff;
  };
  const std::vector<RestrictedTerm>& terms() const { return terms_; }
  int dropped_count() const { return dropped_count_; }

  // Per-term carriers ||S_i ∩ T||, aligned with base terms (empty allowed).
  std::vector<std::vector<int>> carriers() const;

  // The restriction as a standalone expression; empty intersections are
  // omitted (each is just the origin).
  MinkowskiExpression to_expression() const;

 private:
  MinkowskiExpression base_;
  OctantLabel octant_;
  std::vector<RestrictedTerm> terms_;
  int dropped_count_;
};

OctantRestriction restrict(const MinkowskiExpression& p, const OctantLabel& t);

// max of c.x over P, for nonnegative coefficients:
// sum_i y_i * max(0, max_{s in S_i} c.e_s)  with  c.e_{-k} = -c_k.
Int support_value(const MinkowskiExpression& p, std::span<const std::int64_t> c);

// Per-coordinate interval [-support(P,-e_i), support(P,+e_i)] containing P.
std::vector<std::pair<Int, Int>> bounding_box(const MinkowskiExpression& p);

// The template Q^(t) = tP + unit cube: sets (S_1,...,S_m, {1},...,{n}) with
// coefficients (t*y_1,...,t*y_m, 1,...,1).  Used for Ehrhart evaluation and
// for counting unshifted lattice points at t = 1.
struct DilatedExpression {
  int n;
  int base_term_count;                    // m: how many leading sets carry t*y
  std::vector<AdmissibleSubset> sets;     // size m + n
  std::vector<std::int64_t> base_coeffs;  // y_1..y_m, then n ones

  MinkowskiExpression at(std::int64_t t) const;
};

DilatedExpression scale_and_pad(const MinkowskiExpression& p);

}  // namespace bperm
