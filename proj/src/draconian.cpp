#include "bperm/draconian.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "bperm/errors.hpp"

namespace bperm {

GroundFamily::GroundFamily(std::vector<std::vector<int>> sets, std::vector<int> ground,
                           const Limits& limits)
    : sets_(std::move(sets)) {
  const int m = static_cast<int>(sets_.size());
  if (m > limits.max_terms)
    fail(Errc::too_many_terms, "family has " + std::to_string(m) + " sets, guard is " +
                                   std::to_string(limits.max_terms));
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  ground_size_ = static_cast<int>(ground.size());

  std::map<int, int> bit_of;
  for (int i = 0; i < ground_size_; ++i) bit_of[ground[i]] = i;
  if (ground_size_ > 64) fail(Errc::out_of_range, "ground set larger than 64 elements");

  std::vector<std::uint64_t> masks;
  masks.reserve(sets_.size());
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::uint64_t mask = 0;
    for (int e : s) {
      auto it = bit_of.find(e);
      if (it == bit_of.end())
        fail(Errc::out_of_range, "set element " + std::to_string(e) + " not in ground set");
      mask |= std::uint64_t{1} << it->second;
    }
    masks.push_back(mask);
  }

  union_card_.assign(std::size_t{1} << m, 0);
  std::vector<std::uint64_t> union_mask(std::size_t{1} << m, 0);
  for (std::uint32_t j = 1; j < (std::uint32_t{1} << m); ++j) {
    std::uint32_t low = j & (j - 1);            // j without its lowest set bit
    int i = std::countr_zero(j);
    union_mask[j] = union_mask[low] | masks[i];
    union_card_[j] = static_cast<std::uint8_t>(std::popcount(union_mask[j]));
  }
}

std::vector<int> ground_range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

namespace {

// Depth-first enumeration in lexicographic order.  subset_sums[J] holds
// sum_{i in J} a_i for every J over the already-assigned prefix; when a_k is
// chosen, the sums for all subsets with top index k are filled in and checked
// against the union bounds.  Since raising a_k only raises those sums, the
// first violated bound cuts off all larger a_k values too.
struct Enumerator {
  const GroundFamily& family;
  int target;
  int slack;
  int cap;  // per-entry maximum (target itself when uncapped)
  std::vector<int> subset_sums;
  std::vector<int> current;
  std::vector<DraconianSequence> out;

  Enumerator(const GroundFamily& f, int target_sum, int slack_, int cap_)
      : family(f), target(target_sum), slack(slack_), cap(cap_) {
    subset_sums.assign(std::size_t{1} << f.set_count(), 0);
    current.assign(f.set_count(), 0);
  }

  void run() { descend(0, target); }

  void descend(int k, int remaining) {
    const int m = family.set_count();
    if (k == m) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    // The full suffix {k,...,m-1} must absorb everything that is left.
    std::uint32_t suffix = ((std::uint32_t{1} << m) - 1) & ~((std::uint32_t{1} << k) - 1);
    if (remaining > family.union_size(suffix) - slack) return;

    const std::uint32_t top = std::uint32_t{1} << k;
    for (int value = 0; value <= std::min(remaining, cap); ++value) {
      current[k] = value;
      bool feasible = true;
      for (std::uint32_t low = 0; low < top && feasible; ++low) {
        std::uint32_t j = low | top;
        subset_sums[j] = subset_sums[low] + value;
        feasible = subset_sums[j] <= family.union_size(j) - slack;
      }
      if (!feasible) break;  // larger values only increase the violated sum
      descend(k + 1, remaining - value);
    }
    current[k] = 0;
  }
};

void check_enumeration_args(const GroundFamily& family, int target_sum, int slack,
                            const Limits& limits) {
  if (family.set_count() > limits.max_terms)
    fail(Errc::too_many_terms, "family has " + std::to_string(family.set_count()) +
                                   " sets, guard is " + std::to_string(limits.max_terms));
  if (target_sum < 0) fail(Errc::out_of_range, "target sum must be nonnegative");
  if (slack != 0 && slack != 1) fail(Errc::out_of_range, "slack must be 0 or 1");
}

}  // namespace

std::vector<DraconianSequence> enumerate_draconian(const GroundFamily& family,
                                                   int target_sum, int slack,
                                                   const Limits& limits) {
  check_enumeration_args(family, target_sum, slack, limits);
  if (family.set_count() == 0)
    return target_sum == 0 ? std::vector<DraconianSequence>{DraconianSequence{}}
                           : std::vector<DraconianSequence>{};
  Enumerator e(family, target_sum, slack, target_sum);
  e.run();
  return std::move(e.out);
}

std::vector<DraconianSequence> draconian_capped(const GroundFamily& family,
                                                int target_sum, int slack,
                                                const Limits& limits) {
  check_enumeration_args(family, target_sum, slack, limits);
  if (family.set_count() == 0)
    return target_sum == 0 ? std::vector<DraconianSequence>{DraconianSequence{}}
                           : std::vector<DraconianSequence>{};
  Enumerator e(family, target_sum, slack, 1);
  e.run();
  return std::move(e.out);
}

bool is_draconian(const DraconianSequence& a, const GroundFamily& family,
                  int target_sum, int slack) {
  const int m = family.set_count();
  if (static_cast<int>(a.size()) != m)
    fail(Errc::length_mismatch, "sequence has " + std::to_string(a.size()) +
                                    " entries, family has " + std::to_string(m) + " sets");
  int sum = 0;
  for (int v : a) {
    if (v < 0) return false;
    sum += v;
  }
  if (sum != target_sum) return false;
  std::vector<int> subset_sums(std::size_t{1} << m, 0);
  for (std::uint32_t j = 1; j < (std::uint32_t{1} << m); ++j) {
    std::uint32_t low = j & (j - 1);
    subset_sums[j] = subset_sums[low] + a[std::countr_zero(j)];
    if (subset_sums[j] > family.union_size(j) - slack) return false;
  }
  return true;
}

}  // namespace bperm
