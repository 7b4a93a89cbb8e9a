#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bperm/draconian.hpp"
#include "bperm/expression.hpp"
#include "bperm/limits.hpp"
#include "bperm/numeric.hpp"
#include "bperm/polynomial.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm {

// y(y-1)...(y-a+1) / a!, defined for every integer y (the polynomial
// extension of the binomial coefficient to negative arguments).
Int gen_binomial(const Int& y, int a);

// binom(y+a-1, a) = (-1)^a binom(-y, a): the count of a-multisets from y
// symbols.
Int rising_binomial(const Int& y, int a);

// Lattice points of the type A difference body: over a family of m neighbor
// sets on a ground set of size n', sums rising binomials over all sequences
// with target n'-1 and slack 1.
Int count_type_a(const GroundFamily& family, std::span<const std::int64_t> y,
                 const Limits& limits = {});

struct ShiftedCount {
  Int total;
  std::vector<std::pair<OctantLabel, Int>> octants;  // canonical octant order
};

// |(P - unit cube) ∩ Z^n|: per octant T, sums prod_i gen_binomial(y_i, a_i)
// over the sequences of the restricted family (target n, slack 0).  Valid for
// coefficients of any sign.
ShiftedCount count_shifted_type_b(const MinkowskiExpression& p, const Limits& limits = {});

// |P ∩ Z^n|, obtained by counting shifted points of P + unit cube.
Int count_type_b(const MinkowskiExpression& p, const Limits& limits = {});

// Same total as count_shifted_type_b, computed by first collecting the union
// D(P) of all per-octant sequence sets and weighting each sequence by the
// number of octants admitting it.
Int count_multiplicity_form(const MinkowskiExpression& p, const Limits& limits = {});

// Ehrhart polynomial of P via the template tP + unit cube: every
// gen_binomial(t*y_i, a_i) becomes a degree-a_i polynomial in t, and the
// padding terms only cap their own positions at 1.
EhrhartPolynomial ehrhart(const MinkowskiExpression& p, const Limits& limits = {});

// sum_T sum_{a in D(P_T)} prod_i y_i^{a_i} / a_i!; the leading Ehrhart
// coefficient.  Zero when P is not full-dimensional.
Rational volume(const MinkowskiExpression& p, const Limits& limits = {});

// Number of octants T admitting a system of distinct representatives
// g(i) in S_i ∩ T filling T; decided per octant by bipartite matching.
// Expects exactly n sets, all built for dimension n.
std::int64_t signed_transversal_count(std::span<const AdmissibleSubset> sets,
                                      const Limits& limits = {});

// The transversal-sum forms of the shifted count and the normalized volume:
// sums over multisets of n term indices (multiplicity vector a) of the
// transversal count of the chosen sets, weighted by prod gen_binomial(y_i,a_i)
// for the count and by (n!/prod a_i!) prod y_i^{a_i} for NVol.  Always equal
// to count_shifted_type_b and n! * volume respectively.
Int transversal_count_shifted(const MinkowskiExpression& p, const Limits& limits = {});
Int transversal_nvol(const MinkowskiExpression& p, const Limits& limits = {});

}  // namespace bperm
