#include "bperm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "bperm/errors.hpp"

namespace bperm {

namespace {

Int int128_to_int(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag =
      negative ? ~static_cast<unsigned __int128>(v) + 1 : static_cast<unsigned __int128>(v);
  Int out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? Int(-out) : out;
}

}  // namespace

Membership::Membership(const MinkowskiExpression& p, const Limits& limits)
    : Membership(p, std::vector<LatticePoint>{}, limits) {}

Membership::Membership(const MinkowskiExpression& p,
                       const std::vector<LatticePoint>& erosion_vertices,
                       const Limits& limits)
    : n_(p.n()) {
  if (!p.all_nonnegative())
    fail(Errc::negative_coefficient, "membership oracle requires nonnegative coefficients");
  if (n_ > limits.max_oracle_dim)
    fail(Errc::dimension_too_large, "oracle guard is n <= " +
                                        std::to_string(limits.max_oracle_dim) + ", got " +
                                        std::to_string(n_));
  for (const LatticePoint& v : erosion_vertices)
    if (static_cast<int>(v.size()) != n_)
      fail(Errc::length_mismatch, "vertex length does not match dimension");

  std::vector<std::int64_t> c(n_, -1);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) {
      Int support = support_value(p, c);
      // x + conv(V) inside the halfspace c.x <= b means c.x <= b - max_V c.v.
      if (!erosion_vertices.empty()) {
        bool first = true;
        __int128 worst = 0;
        for (const LatticePoint& v : erosion_vertices) {
          __int128 dot = 0;
          for (int j = 0; j < n_; ++j) {
            if (c[j] > 0) dot += v[j];
            else if (c[j] < 0) dot -= v[j];
          }
          if (first || dot > worst) worst = dot;
          first = false;
        }
        support -= int128_to_int(worst);
      }
      normals_.push_back(c);
      supports_.push_back(std::move(support));
    }
    int k = n_ - 1;
    while (k >= 0 && c[k] == 1) c[k--] = -1;
    if (k < 0) break;
    ++c[k];
  }

  const Int lo = std::numeric_limits<std::int64_t>::min();
  const Int hi = std::numeric_limits<std::int64_t>::max();
  support_fast_.reserve(supports_.size());
  support_fits_.reserve(supports_.size());
  for (const Int& s : supports_) {
    const bool fits = s >= lo && s <= hi;
    support_fits_.push_back(fits ? 1 : 0);
    support_fast_.push_back(fits ? s.convert_to<std::int64_t>() : 0);
  }
}

bool Membership::contains(std::span<const std::int64_t> x) const {
  if (static_cast<int>(x.size()) != n_)
    fail(Errc::length_mismatch, "point has length " + std::to_string(x.size()) +
                                    ", oracle has n=" + std::to_string(n_));
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    const std::int64_t* c = normals_[i].data();
    __int128 dot = 0;
    for (int j = 0; j < n_; ++j) {
      if (c[j] > 0) dot += x[j];
      else if (c[j] < 0) dot -= x[j];
    }
    if (support_fits_[i]) {
      if (dot > static_cast<__int128>(support_fast_[i])) return false;
    } else if (int128_to_int(dot) > supports_[i]) {
      return false;
    }
  }
  return true;
}

bool Membership::contains(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_)
    fail(Errc::length_mismatch, "point has length " + std::to_string(x.size()) +
                                    ", oracle has n=" + std::to_string(n_));
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    Rational dot = 0;
    for (int j = 0; j < n_; ++j) dot += Rational(normals_[i][j]) * x[j];
    if (dot > Rational(supports_[i])) return false;
  }
  return true;
}

bool contains(const MinkowskiExpression& p, std::span<const std::int64_t> x,
              const Limits& limits) {
  return Membership(p, limits).contains(x);
}

bool contains(const MinkowskiExpression& p, std::span<const Rational> x,
              const Limits& limits) {
  return Membership(p, limits).contains(x);
}

namespace {

struct ScanBox {
  std::vector<std::int64_t> lo, hi;
};

// Integer bounds of the scan region, guarded by the point budget.
ScanBox checked_box(const MinkowskiExpression& p, const std::vector<LatticePoint>& shifts,
                    const Limits& limits) {
  ScanBox box;
  Int budget = 1;
  auto bounds = bounding_box(p);
  for (int i = 0; i < p.n(); ++i) {
    Int lo = bounds[i].first;
    Int hi = bounds[i].second;
    // x + v must stay inside for every shift v, so x ranges in [lo-max, hi-min].
    if (!shifts.empty()) {
      std::int64_t vmin = shifts[0][i], vmax = shifts[0][i];
      for (const LatticePoint& v : shifts) {
        vmin = std::min(vmin, v[i]);
        vmax = std::max(vmax, v[i]);
      }
      lo -= vmax;
      hi -= vmin;
    }
    if (hi < lo) {
      box.lo.assign(p.n(), 0);
      box.hi.assign(p.n(), -1);  // empty scan
      return box;
    }
    budget *= hi - lo + 1;
    if (budget > limits.max_box_points)
      fail(Errc::box_too_large, "bounding box exceeds the point budget of " +
                                    std::to_string(limits.max_box_points));
    const Int coordinate_cap = Int(1) << 40;
    if (hi > coordinate_cap || lo < -coordinate_cap)
      fail(Errc::box_too_large, "scan coordinates exceed the magnitude budget");
    box.lo.push_back(lo.convert_to<std::int64_t>());
    box.hi.push_back(hi.convert_to<std::int64_t>());
  }
  return box;
}

std::vector<LatticePoint> scan(const MinkowskiExpression& p,
                               const std::vector<LatticePoint>& shifts,
                               const Limits& limits) {
  Membership oracle(p, shifts, limits);
  ScanBox box = checked_box(p, shifts, limits);
  std::vector<LatticePoint> out;
  if (!box.hi.empty() && box.hi[0] < box.lo[0]) return out;
  LatticePoint x = box.lo;
  while (true) {
    if (oracle.contains(x)) out.push_back(x);
    int k = p.n() - 1;
    while (k >= 0 && x[k] == box.hi[k]) x[k] = box.lo[k], --k;
    if (k < 0) break;
    ++x[k];
  }
  return out;  // odometer order = lexicographic
}

}  // namespace

std::vector<LatticePoint> lattice_points(const MinkowskiExpression& p, const Limits& limits) {
  return scan(p, {}, limits);
}

std::vector<LatticePoint> lattice_points_minus(const MinkowskiExpression& p,
                                               const std::vector<LatticePoint>& vertices,
                                               const Limits& limits) {
  if (vertices.empty())
    fail(Errc::empty_set, "Minkowski difference needs a nonempty vertex set");
  for (const LatticePoint& v : vertices)
    if (static_cast<int>(v.size()) != p.n())
      fail(Errc::length_mismatch, "vertex length does not match dimension");
  return scan(p, vertices, limits);
}

std::vector<LatticePoint> cube_corners(const OctantLabel& t) {
  const int n = t.n();
  if (n > 20) fail(Errc::dimension_too_large, "corner enumeration guard is n <= 20");
  std::vector<LatticePoint> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
    LatticePoint corner(n, 0);
    for (int i = 0; i < n; ++i)
      if ((code >> (n - 1 - i)) & 1u) corner[i] = t.sign(i + 1);
    out.push_back(std::move(corner));
  }
  return out;
}

std::vector<LatticePoint> simplex_vertices(const AdmissibleSubset& s) {
  std::vector<LatticePoint> out;
  out.reserve(s.size() + 1);
  out.emplace_back(s.n(), 0);
  for (int v : s.entries()) {
    LatticePoint e(s.n(), 0);
    e[std::abs(v) - 1] = v < 0 ? -1 : 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LatticePoint> simplex_vertices(const OctantLabel& t) {
  return simplex_vertices(t.as_subset());
}

EhrhartPolynomial ehrhart_interpolate(const MinkowskiExpression& p, const Limits& limits) {
  const int n = p.n();
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (int t = 0; t <= n; ++t)
    values.emplace_back(Int(lattice_points(p.dilated(t), limits).size()));

  // Lagrange basis over the nodes 0..n.
  Polynomial sum;
  for (int j = 0; j <= n; ++j) {
    Polynomial basis = Polynomial::constant(Rational(1));
    Rational denom(1);
    for (int k = 0; k <= n; ++k) {
      if (k == j) continue;
      basis = basis * Polynomial({Rational(-k), Rational(1)});
      denom *= Rational(j - k);
    }
    basis *= values[j] / denom;
    sum += basis;
  }
  EhrhartPolynomial out;
  out.coeffs.resize(n + 1, Rational(0));
  for (int k = 0; k <= std::min(n, sum.degree()); ++k) out.coeffs[k] = sum.coeff(k);
  return out;
}

Rational volume_oracle(const MinkowskiExpression& p, const Limits& limits) {
  return ehrhart_interpolate(p, limits).leading_coeff();
}

}  // namespace bperm
