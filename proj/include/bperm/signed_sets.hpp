#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bperm/limits.hpp"

namespace bperm {

// A signed coordinate index.  Positive k names the basis direction e_k;
// negative k names the reflected direction -e_k.  Zero is never a valid
// value.
class SignedIndex {
 public:
  explicit SignedIndex(int value);

  int value() const { return value_; }
  int magnitude() const { return value_ < 0 ? -value_ : value_; }
  int sign() const { return value_ < 0 ? -1 : 1; }

  friend auto operator<=>(const SignedIndex&, const SignedIndex&) = default;

 private:
  int value_;
};

// A nonempty set of signed indices with magnitudes in [1, n] that never
// contains an index together with its negation.  Entries are kept sorted by
// magnitude, so two equal sets compare equal structurally.
class AdmissibleSubset {
 public:
  AdmissibleSubset(std::span<const int> values, int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  bool contains(int signed_value) const;

  // The magnitudes of the entries, sorted ascending.  Always the same size as
  // entries(): admissibility forbids two entries sharing a magnitude.
  std::vector<int> carrier() const;

  std::string str() const;

  friend bool operator==(const AdmissibleSubset&, const AdmissibleSubset&) = default;
  // Orders by (n, size, entries) — graded, smaller sets first; used only to
  // fix canonical orders in output.
  friend bool operator<(const AdmissibleSubset& a, const AdmissibleSubset& b);

 private:
  int n_;
  std::vector<int> entries_;  // sorted by magnitude
};

AdmissibleSubset make_admissible(std::span<const int> values, int n);
AdmissibleSubset make_admissible(std::initializer_list<int> values, int n);
std::vector<int> carrier(const AdmissibleSubset& s);

// A full-size admissible subset: one sign per coordinate, i.e. an octant of
// R^n.  Stored as a dense sign vector.
class OctantLabel {
 public:
  explicit OctantLabel(const AdmissibleSubset& s);
  OctantLabel(std::span<const int> signs);  // one entry in {-1,+1} per coordinate

  // The all-positive octant {1,...,n}.
  static OctantLabel positive(int n);

  int n() const { return static_cast<int>(signs_.size()); }
  int sign(int coordinate) const;            // coordinate in [1, n]
  bool contains(int signed_value) const;     // is +k (or -k) a member
  std::vector<int> entries() const;          // signed values, sorted by magnitude
  AdmissibleSubset as_subset() const;

  std::string str() const;

  friend bool operator==(const OctantLabel&, const OctantLabel&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

// All 2^n octants in canonical order: sign vectors enumerated in binary with
// coordinate 1 as the most significant bit and + before -.  For n=2 the order
// is {1,2}, {1,-2}, {-1,2}, {-1,-2}.
std::vector<OctantLabel> all_octants(int n, const Limits& limits = {});

}  // namespace bperm
