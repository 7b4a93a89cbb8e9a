#pragma once

// Shared helpers for the test binaries.  The reference implementations here
// are deliberately written against the library's algorithms from first
// principles (plain std::set unions, textbook feasibility scans) so that
// agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "bperm/expression.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm_test {

inline bperm::MinkowskiExpression expr(
    int n, const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms) {
  std::vector<bperm::Term> built;
  for (const auto& [set, coeff] : terms)
    built.push_back(bperm::Term{bperm::AdmissibleSubset(set, n), coeff});
  return bperm::MinkowskiExpression(n, std::move(built));
}

inline bperm::OctantLabel octant(const std::vector<int>& entries, int n) {
  return bperm::OctantLabel(bperm::AdmissibleSubset(entries, n));
}

// Brute-force reference for the sequence enumeration: every composition of
// the target, checked against every nonempty index subset with std::set
// unions.  Independent of GroundFamily and its bitmask tables.
inline std::vector<std::vector<int>> ref_draconian(const std::vector<std::vector<int>>& sets,
                                                   int target, int slack,
                                                   bool cap1 = false) {
  const int m = static_cast<int>(sets.size());
  std::vector<std::vector<int>> out;
  std::vector<int> a(m, 0);
  auto admissible = [&]() {
    for (std::uint32_t j = 1; j < (std::uint32_t{1} << m); ++j) {
      std::set<int> u;
      int sum = 0;
      for (int i = 0; i < m; ++i)
        if (j & (std::uint32_t{1} << i)) {
          u.insert(sets[i].begin(), sets[i].end());
          sum += a[i];
        }
      if (sum > static_cast<int>(u.size()) - slack) return false;
    }
    return true;
  };
  std::function<void(int, int)> descend = [&](int k, int remaining) {
    if (k == m) {
      if (remaining == 0 && admissible()) out.push_back(a);
      return;
    }
    for (int v = 0; v <= (cap1 ? std::min(1, remaining) : remaining); ++v) {
      a[k] = v;
      descend(k + 1, remaining - v);
    }
    a[k] = 0;
  };
  if (m == 0) {
    if (target == 0) out.push_back({});
    return out;
  }
  descend(0, target);
  return out;
}

// Reference membership and enumeration for a sum of coordinate simplices in
// the lifted space: Q = sum_i y_i * conv{e_j : j in I_i} over coordinates
// {0,...,n}.  A nonnegative integer vector q lies in Q exactly when its total
// is sum y_i and, for every coordinate subset K, the mass on K is at most the
// total coefficient of the sets meeting K.
struct LiftedSum {
  int coords;                         // n + 1
  std::vector<std::vector<int>> sets; // subsets of {0,...,coords-1}
  std::vector<std::int64_t> y;        // same length, nonnegative

  bool contains(const std::vector<std::int64_t>& q) const {
    std::int64_t total_y = 0;
    for (std::int64_t v : y) total_y += v;
    std::int64_t total_q = 0;
    for (std::int64_t v : q) {
      if (v < 0) return false;
      total_q += v;
    }
    if (total_q != total_y) return false;
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << coords); ++k) {
      std::int64_t mass = 0;
      for (int j = 0; j < coords; ++j)
        if (k & (std::uint32_t{1} << j)) mass += q[j];
      std::int64_t capacity = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        bool meets = false;
        for (int j : sets[i])
          if (k & (std::uint32_t{1} << j)) {
            meets = true;
            break;
          }
        if (meets) capacity += y[i];
      }
      if (mass > capacity) return false;
    }
    return true;
  }

  std::vector<std::vector<std::int64_t>> lattice_points() const {
    std::int64_t total_y = 0;
    for (std::int64_t v : y) total_y += v;
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> q(coords, 0);
    std::function<void(int, std::int64_t)> descend = [&](int j, std::int64_t remaining) {
      if (j == coords - 1) {
        q[j] = remaining;
        if (contains(q)) out.push_back(q);
        q[j] = 0;
        return;
      }
      for (std::int64_t v = 0; v <= remaining; ++v) {
        q[j] = v;
        descend(j + 1, remaining - v);
      }
      q[j] = 0;
    };
    if (coords == 0) return out;
    descend(0, total_y);
    return out;
  }
};

// The lifted sum of an octant restriction: I_i = {0} ∪ ||S_i ∩ T||.
inline LiftedSum lifted_sum_of_octant(const bperm::MinkowskiExpression& p,
                                      const bperm::OctantLabel& t) {
  LiftedSum q;
  q.coords = p.n() + 1;
  for (const bperm::Term& term : p.terms()) {
    std::vector<int> lifted{0};
    for (int v : term.set.entries())
      if (t.contains(v)) lifted.push_back(std::abs(v));
    q.sets.push_back(std::move(lifted));
    q.y.push_back(term.coeff);
  }
  return q;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace bperm_test
