#include "bperm/expression.hpp"

#include <algorithm>
#include <map>

#include "bperm/errors.hpp"

namespace bperm {

MinkowskiExpression::MinkowskiExpression(int n, std::vector<Term> terms) : n_(n) {
  if (n < 1) fail(Errc::out_of_range, "ambient dimension must be at least 1");
  terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (term.set.n() != n)
      fail(Errc::dimension_mismatch, "term set " + term.set.str() + " built for dimension " +
                                         std::to_string(term.set.n()) + ", expression has " +
                                         std::to_string(n));
    if (term.coeff == 0) {
      ++dropped_zero_terms_;  // 0 * D(S) is the origin, the Minkowski identity
      continue;
    }
    terms_.push_back(std::move(term));
  }
}

bool MinkowskiExpression::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff >= 0; });
}

bool MinkowskiExpression::all_unit() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff == 1; });
}

MinkowskiExpression MinkowskiExpression::merged() const {
  std::map<AdmissibleSubset, std::int64_t> sums;
  for (const Term& t : terms_) {
    auto [it, inserted] = sums.try_emplace(t.set, 0);
    std::int64_t next = it->second + t.coeff;
    if ((t.coeff > 0 && next < it->second) || (t.coeff < 0 && next > it->second))
      fail(Errc::out_of_range, "coefficient overflow while merging " + t.set.str());
    it->second = next;
  }
  std::vector<Term> out;
  out.reserve(sums.size());
  for (auto& [set, y] : sums) out.push_back(Term{set, y});
  return MinkowskiExpression(n_, std::move(out));
}

MinkowskiExpression MinkowskiExpression::unit_expanded() const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.coeff < 0)
      fail(Errc::negative_coefficient,
           "cannot expand negative coefficient on " + t.set.str());
    for (std::int64_t k = 0; k < t.coeff; ++k) out.push_back(Term{t.set, 1});
  }
  return MinkowskiExpression(n_, std::move(out));
}

MinkowskiExpression MinkowskiExpression::dilated(std::int64_t t) const {
  if (t < 0) fail(Errc::out_of_range, "dilation factor must be nonnegative");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& term : terms_) {
    __int128 scaled = static_cast<__int128>(term.coeff) * t;
    if (scaled > INT64_MAX || scaled < INT64_MIN)
      fail(Errc::out_of_range, "coefficient overflow in dilation");
    out.push_back(Term{term.set, static_cast<std::int64_t>(scaled)});
  }
  return MinkowskiExpression(n_, std::move(out));
}

std::string MinkowskiExpression::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(terms_[i].coeff) + "*D" + terms_[i].set.str();
  }
  if (out.empty()) out = "0";
  return out;
}

OctantRestriction::OctantRestriction(const MinkowskiExpression& base, const OctantLabel& octant)
    : base_(base), octant_(octant), dropped_count_(0) {
  if (base.n() != octant.n())
    fail(Errc::dimension_mismatch, "expression has n=" + std::to_string(base.n()) +
                                       " but octant has n=" + std::to_string(octant.n()));
  terms_.reserve(base.terms().size());
  for (const Term& term : base.terms()) {
    RestrictedTerm rt;
    rt.coeff = term.coeff;
    for (int v : term.set.entries())
      if (octant.contains(v)) rt.entries.push_back(v);
    if (rt.entries.empty()) ++dropped_count_;
    terms_.push_back(std::move(rt));
  }
}

std::vector<std::vector<int>> OctantRestriction::carriers() const {
  std::vector<std::vector<int>> out;
  out.reserve(terms_.size());
  for (const RestrictedTerm& rt : terms_) {
    std::vector<int> mags;
    mags.reserve(rt.entries.size());
    for (int v : rt.entries) mags.push_back(std::abs(v));
    out.push_back(std::move(mags));
  }
  return out;
}

MinkowskiExpression OctantRestriction::to_expression() const {
  std::vector<Term> out;
  for (const RestrictedTerm& rt : terms_) {
    if (rt.entries.empty()) continue;
    out.push_back(Term{AdmissibleSubset(rt.entries, base_.n()), rt.coeff});
  }
  return MinkowskiExpression(base_.n(), std::move(out));
}

OctantRestriction restrict(const MinkowskiExpression& p, const OctantLabel& t) {
  return OctantRestriction(p, t);
}

Int support_value(const MinkowskiExpression& p, std::span<const std::int64_t> c) {
  if (static_cast<int>(c.size()) != p.n())
    fail(Errc::length_mismatch, "direction has length " + std::to_string(c.size()) +
                                    ", expression has n=" + std::to_string(p.n()));
  if (!p.all_nonnegative())
    fail(Errc::negative_coefficient,
         "support values are defined only for nonnegative coefficients");
  Int total = 0;
  for (const Term& term : p.terms()) {
    std::int64_t best = 0;  // the origin vertex of D(S)
    for (int v : term.set.entries()) {
      std::int64_t dot = v > 0 ? c[v - 1] : -c[-v - 1];
      best = std::max(best, dot);
    }
    total += Int(term.coeff) * best;
  }
  return total;
}

std::vector<std::pair<Int, Int>> bounding_box(const MinkowskiExpression& p) {
  std::vector<std::pair<Int, Int>> box;
  box.reserve(p.n());
  std::vector<std::int64_t> c(p.n(), 0);
  for (int i = 0; i < p.n(); ++i) {
    c[i] = -1;
    Int lo = -support_value(p, c);
    c[i] = 1;
    Int hi = support_value(p, c);
    c[i] = 0;
    box.emplace_back(std::move(lo), std::move(hi));
  }
  return box;
}

MinkowskiExpression DilatedExpression::at(std::int64_t t) const {
  std::vector<Term> terms;
  terms.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::int64_t y = base_coeffs[i];
    if (static_cast<int>(i) < base_term_count) {
      __int128 scaled = static_cast<__int128>(y) * t;
      if (scaled > INT64_MAX || scaled < INT64_MIN)
        fail(Errc::out_of_range, "coefficient overflow in dilation");
      y = static_cast<std::int64_t>(scaled);
    }
    terms.push_back(Term{sets[i], y});
  }
  return MinkowskiExpression(n, std::move(terms));
}

DilatedExpression scale_and_pad(const MinkowskiExpression& p) {
  DilatedExpression out;
  out.n = p.n();
  out.base_term_count = p.term_count();
  for (const Term& term : p.terms()) {
    out.sets.push_back(term.set);
    out.base_coeffs.push_back(term.coeff);
  }
  for (int i = 1; i <= p.n(); ++i) {
    int v[1] = {i};
    out.sets.push_back(AdmissibleSubset(std::span<const int>(v, 1), p.n()));
    out.base_coeffs.push_back(1);
  }
  return out;
}

}  // namespace bperm
