#include "bperm/counting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "bperm/bridge.hpp"
#include "bperm/errors.hpp"

namespace bperm {

Int gen_binomial(const Int& y, int a) {
  if (a < 0) fail(Errc::out_of_range, "binomial lower index must be nonnegative");
  Int numerator = 1;
  for (int r = 0; r < a; ++r) numerator *= y - r;
  return numerator / factorial(a);  // product of a consecutive integers: exact
}

Int rising_binomial(const Int& y, int a) { return gen_binomial(y + a - 1, a); }

namespace {

GroundFamily restricted_family(const MinkowskiExpression& p, const OctantLabel& t,
                               const Limits& limits) {
  return GroundFamily(restrict(p, t).carriers(), ground_range(1, p.n()), limits);
}

// prod_{r=0}^{a-1} (y t - r) / a!  as a polynomial in t.
Polynomial binomial_poly(std::int64_t y, int a) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (int r = 0; r < a; ++r)
    out = out * Polynomial({Rational(-r), Rational(y)});
  out *= Rational(1) / Rational(factorial(a));
  return out;
}

// All multiplicity vectors a >= 0 of length m with sum a_i = total, in
// lexicographic order.
void for_each_multiplicity(int m, int total,
                           const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(m, 0);
  std::function<void(int, int)> descend = [&](int k, int remaining) {
    if (k == m) {
      if (remaining == 0) fn(a);
      return;
    }
    if (k == m - 1) {
      a[k] = remaining;
      fn(a);
      a[k] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[k] = v;
      descend(k + 1, remaining - v);
    }
    a[k] = 0;
  };
  if (m == 0) {
    if (total == 0) fn(a);
    return;
  }
  descend(0, total);
}

Int multiset_count(int m, int n) { return rising_binomial(Int(m), n); }

}  // namespace

Int count_type_a(const GroundFamily& family, std::span<const std::int64_t> y,
                 const Limits& limits) {
  if (static_cast<int>(y.size()) != family.set_count())
    fail(Errc::length_mismatch, "got " + std::to_string(y.size()) + " coefficients for " +
                                    std::to_string(family.set_count()) + " sets");
  const int target = family.ground_size() - 1;
  Int total = 0;
  for (const DraconianSequence& a : enumerate_draconian(family, target, 1, limits)) {
    Int product = 1;
    for (std::size_t i = 0; i < a.size(); ++i) product *= rising_binomial(Int(y[i]), a[i]);
    total += product;
  }
  return total;
}

ShiftedCount count_shifted_type_b(const MinkowskiExpression& p, const Limits& limits) {
  ShiftedCount out;
  out.total = 0;
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    GroundFamily family = restricted_family(p, t, limits);
    Int sub = 0;
    for (const DraconianSequence& a : enumerate_draconian(family, p.n(), 0, limits)) {
      Int product = 1;
      for (std::size_t i = 0; i < a.size(); ++i)
        product *= gen_binomial(Int(p.terms()[i].coeff), a[i]);
      sub += product;
    }
    out.total += sub;
    out.octants.emplace_back(t, std::move(sub));
  }
  return out;
}

Int count_type_b(const MinkowskiExpression& p, const Limits& limits) {
  return count_shifted_type_b(scale_and_pad(p).at(1), limits).total;
}

Int count_multiplicity_form(const MinkowskiExpression& p, const Limits& limits) {
  std::map<DraconianSequence, int> octant_multiplicity;
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    GroundFamily family = restricted_family(p, t, limits);
    for (const DraconianSequence& a : enumerate_draconian(family, p.n(), 0, limits))
      ++octant_multiplicity[a];
  }
  Int total = 0;
  for (const auto& [a, multiplicity] : octant_multiplicity) {
    Int product = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      product *= gen_binomial(Int(p.terms()[i].coeff), a[i]);
    total += multiplicity * product;
  }
  return total;
}

EhrhartPolynomial ehrhart(const MinkowskiExpression& p, const Limits& limits) {
  const int n = p.n();
  const int m = p.term_count();
  DilatedExpression padded = scale_and_pad(p);
  Polynomial sum;
  for (const OctantLabel& t : all_octants(n, limits)) {
    std::vector<std::vector<int>> carriers;
    carriers.reserve(padded.sets.size());
    for (const AdmissibleSubset& s : padded.sets) {
      std::vector<int> mags;
      for (int v : s.entries())
        if (t.contains(v)) mags.push_back(std::abs(v));
      carriers.push_back(std::move(mags));
    }
    GroundFamily family(carriers, ground_range(1, n), limits);
    for (const DraconianSequence& a : enumerate_draconian(family, n, 0, limits)) {
      Polynomial product = Polynomial::constant(Rational(1));
      for (int i = 0; i < m; ++i)
        product = product * binomial_poly(padded.base_coeffs[i], a[i]);
      for (std::size_t i = m; i < a.size(); ++i)
        product *= Rational(gen_binomial(Int(1), a[i]));  // always 1: padding caps
      sum += product;
    }
  }
  EhrhartPolynomial out;
  out.coeffs.resize(n + 1, Rational(0));
  for (int k = 0; k <= std::min(n, sum.degree()); ++k) out.coeffs[k] = sum.coeff(k);
  return out;
}

Rational volume(const MinkowskiExpression& p, const Limits& limits) {
  Rational total(0);
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    GroundFamily family = restricted_family(p, t, limits);
    for (const DraconianSequence& a : enumerate_draconian(family, p.n(), 0, limits)) {
      Rational product(1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        Int power = 1;
        for (int r = 0; r < a[i]; ++r) power *= p.terms()[i].coeff;
        product *= Rational(power) / Rational(factorial(a[i]));
      }
      total += product;
    }
  }
  return total;
}

std::int64_t signed_transversal_count(std::span<const AdmissibleSubset> sets,
                                      const Limits& limits) {
  if (sets.empty()) fail(Errc::dimension_mismatch, "need exactly n sets, got none");
  const int n = sets[0].n();
  if (static_cast<int>(sets.size()) != n)
    fail(Errc::dimension_mismatch, "need exactly " + std::to_string(n) + " sets, got " +
                                       std::to_string(sets.size()));
  for (const AdmissibleSubset& s : sets)
    if (s.n() != n) fail(Errc::dimension_mismatch, "sets built for different dimensions");

  std::int64_t count = 0;
  for (const OctantLabel& t : all_octants(n, limits)) {
    BipartiteGraph g;
    g.right_labels = t.entries();
    std::sort(g.right_labels.begin(), g.right_labels.end());
    g.neighbors.reserve(sets.size());
    for (const AdmissibleSubset& s : sets) {
      std::vector<int> nb;
      for (int v : s.entries())
        if (t.contains(v)) nb.push_back(v);
      std::sort(nb.begin(), nb.end());
      g.neighbors.push_back(std::move(nb));
    }
    if (perfect_matching_exists(g)) ++count;
  }
  return count;
}

namespace {

// Shared loop for the two transversal sums: enumerates multiplicity vectors,
// asks for the transversal count of the multiset they select, and adds the
// caller's weight.
Int transversal_sum(const MinkowskiExpression& p, const Limits& limits,
                    const std::function<Int(const std::vector<int>&, std::int64_t)>& weight) {
  const int n = p.n();
  const int m = p.term_count();
  if (multiset_count(m, n) > limits.max_multisets)
    fail(Errc::multiset_explosion,
         "instance yields more than " + std::to_string(limits.max_multisets) +
             " index multisets");
  Int total = 0;
  for_each_multiplicity(m, n, [&](const std::vector<int>& a) {
    std::vector<AdmissibleSubset> chosen;
    chosen.reserve(n);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < a[i]; ++k) chosen.push_back(p.terms()[i].set);
    std::int64_t transversals = signed_transversal_count(chosen, limits);
    if (transversals != 0) total += weight(a, transversals);
  });
  return total;
}

}  // namespace

Int transversal_count_shifted(const MinkowskiExpression& p, const Limits& limits) {
  return transversal_sum(p, limits, [&](const std::vector<int>& a, std::int64_t transversals) {
    Int product = transversals;
    for (std::size_t i = 0; i < a.size(); ++i)
      product *= gen_binomial(Int(p.terms()[i].coeff), a[i]);
    return product;
  });
}

Int transversal_nvol(const MinkowskiExpression& p, const Limits& limits) {
  const Int n_factorial = factorial(p.n());
  return transversal_sum(p, limits, [&](const std::vector<int>& a, std::int64_t transversals) {
    Int orderings = n_factorial;
    Int product = transversals;
    for (std::size_t i = 0; i < a.size(); ++i) {
      orderings /= factorial(a[i]);  // multinomial: exact division
      Int power = 1;
      for (int r = 0; r < a[i]; ++r) power *= p.terms()[i].coeff;
      product *= power;
    }
    return product * orderings;
  });
}

}  // namespace bperm
