#pragma once

#include <cstdint>
#include <vector>

#include "bperm/limits.hpp"

namespace bperm {

// A candidate multiplicity vector (a_1,...,a_m).
using DraconianSequence = std::vector<int>;

// m labeled sets over a finite ground set, with every union cardinality
// |∪_{i∈J} set_i| precomputed for the 2^m index subsets J.  Ground elements
// are arbitrary integer labels; sets may be empty (an empty set forces
// a_i = 0 in any admissible sequence).
class GroundFamily {
 public:
  GroundFamily(std::vector<std::vector<int>> sets, std::vector<int> ground,
               const Limits& limits = {});

  int set_count() const { return static_cast<int>(sets_.size()); }
  int ground_size() const { return ground_size_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  // |∪_{i∈J} set_i| for the index subset J given as a bitmask.
  int union_size(std::uint32_t index_subset) const {
    return union_card_[index_subset];
  }

 private:
  std::vector<std::vector<int>> sets_;  // normalized: sorted, deduplicated
  int ground_size_;
  std::vector<std::uint8_t> union_card_;  // size 2^m
};

// Convenience ground sets.
std::vector<int> ground_range(int lo, int hi);

// All vectors a >= 0 with sum a_i = target_sum and, for every nonempty index
// subset J, sum_{i in J} a_i <= |∪_{i in J} set_i| - slack.  Output is in
// lexicographic order.  slack is 1 for the type A variant (target n'-1 over a
// ground set of size n') and 0 for the per-octant type B variant (target n).
std::vector<DraconianSequence> enumerate_draconian(const GroundFamily& family,
                                                   int target_sum, int slack,
                                                   const Limits& limits = {});

// As above, additionally requiring every a_i <= 1.
std::vector<DraconianSequence> draconian_capped(const GroundFamily& family,
                                                int target_sum, int slack,
                                                const Limits& limits = {});

// Membership test: sum equals target and every nonempty subset inequality
// holds.
bool is_draconian(const DraconianSequence& a, const GroundFamily& family,
                  int target_sum, int slack);

}  // namespace bperm
