#include "bperm/signed_sets.hpp"

#include <algorithm>

#include "bperm/errors.hpp"

namespace bperm {

SignedIndex::SignedIndex(int value) : value_(value) {
  if (value == 0) fail(Errc::out_of_range, "signed index must be nonzero");
}

AdmissibleSubset::AdmissibleSubset(std::span<const int> values, int n) : n_(n) {
  if (n < 1) fail(Errc::out_of_range, "ambient dimension must be at least 1");
  if (values.empty()) fail(Errc::empty_set, "admissible subset must be nonempty");
  entries_.assign(values.begin(), values.end());
  for (int v : entries_) {
    if (v == 0) fail(Errc::out_of_range, "entry 0 is not a signed index");
    int mag = v < 0 ? -v : v;
    if (mag > n)
      fail(Errc::out_of_range,
           "entry " + std::to_string(v) + " outside dimension " + std::to_string(n));
  }
  std::sort(entries_.begin(), entries_.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] == entries_[i - 1])
      fail(Errc::duplicate_entry, "entry " + std::to_string(entries_[i]) + " repeated");
    if (entries_[i] == -entries_[i - 1])
      fail(Errc::not_admissible,
           "contains both +" + std::to_string(std::abs(entries_[i])) + " and its negation");
  }
}

bool AdmissibleSubset::contains(int signed_value) const {
  return std::find(entries_.begin(), entries_.end(), signed_value) != entries_.end();
}

std::vector<int> AdmissibleSubset::carrier() const {
  std::vector<int> mags;
  mags.reserve(entries_.size());
  for (int v : entries_) mags.push_back(v < 0 ? -v : v);
  return mags;  // already ascending: entries are sorted by magnitude
}

std::string AdmissibleSubset::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + "}";
}

bool operator<(const AdmissibleSubset& a, const AdmissibleSubset& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.entries_.size() != b.entries_.size()) return a.entries_.size() < b.entries_.size();
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
      [](int x, int y) {
        int mx = std::abs(x), my = std::abs(y);
        if (mx != my) return mx < my;
        return x > y;  // +k before -k
      });
}

AdmissibleSubset make_admissible(std::span<const int> values, int n) {
  return AdmissibleSubset(values, n);
}

AdmissibleSubset make_admissible(std::initializer_list<int> values, int n) {
  return AdmissibleSubset(std::span<const int>(values.begin(), values.size()), n);
}

std::vector<int> carrier(const AdmissibleSubset& s) { return s.carrier(); }

OctantLabel::OctantLabel(const AdmissibleSubset& s) {
  if (s.size() != s.n())
    fail(Errc::dimension_mismatch,
         "octant label needs exactly " + std::to_string(s.n()) + " entries, got " +
             std::to_string(s.size()));
  signs_.assign(s.n(), 0);
  for (int v : s.entries()) signs_[std::abs(v) - 1] = static_cast<std::int8_t>(v < 0 ? -1 : 1);
}

OctantLabel::OctantLabel(std::span<const int> signs) {
  if (signs.empty()) fail(Errc::empty_set, "octant label must cover at least one coordinate");
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) fail(Errc::out_of_range, "octant sign must be +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

OctantLabel OctantLabel::positive(int n) {
  if (n < 1) fail(Errc::out_of_range, "ambient dimension must be at least 1");
  std::vector<int> signs(n, 1);
  return OctantLabel(std::span<const int>(signs));
}

int OctantLabel::sign(int coordinate) const {
  if (coordinate < 1 || coordinate > n())
    fail(Errc::out_of_range, "coordinate " + std::to_string(coordinate) + " outside [1," +
                                 std::to_string(n()) + "]");
  return signs_[coordinate - 1];
}

bool OctantLabel::contains(int signed_value) const {
  int mag = std::abs(signed_value);
  if (signed_value == 0 || mag > n()) return false;
  return signs_[mag - 1] == (signed_value < 0 ? -1 : 1);
}

std::vector<int> OctantLabel::entries() const {
  std::vector<int> out;
  out.reserve(signs_.size());
  for (int i = 1; i <= n(); ++i) out.push_back(i * signs_[i - 1]);
  return out;
}

AdmissibleSubset OctantLabel::as_subset() const {
  std::vector<int> vals = entries();
  return AdmissibleSubset(vals, n());
}

std::string OctantLabel::str() const { return as_subset().str(); }

std::vector<OctantLabel> all_octants(int n, const Limits& limits) {
  if (n < 1 || n > limits.max_formula_dim)
    fail(Errc::dimension_too_large, "octant enumeration needs 1 <= n <= " +
                                        std::to_string(limits.max_formula_dim) + ", got " +
                                        std::to_string(n));
  std::vector<OctantLabel> out;
  out.reserve(std::size_t{1} << n);
  std::vector<int> signs(n);
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i)
      signs[i] = ((code >> (n - 1 - i)) & 1u) ? -1 : 1;  // coordinate 1 is the top bit
    out.push_back(OctantLabel(std::span<const int>(signs)));
  }
  return out;
}

}  // namespace bperm
