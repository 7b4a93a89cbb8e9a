#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bperm/expression.hpp"
#include "bperm/limits.hpp"
#include "bperm/numeric.hpp"
#include "bperm/polynomial.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm {

// Brute-force membership for nonnegative-coefficient expressions: x lies in P
// iff c.x <= max_P(c.) for every normal c in {-1,0,1}^n \ {0} (the indicator
// vectors of admissible subsets).  Precomputes all 3^n - 1 support values.
class Membership {
 public:
  explicit Membership(const MinkowskiExpression& p, const Limits& limits = {});

  // Membership of the eroded body P ⊖ conv(vertices): every support value is
  // tightened by the maximum of the normal over the vertex set.
  Membership(const MinkowskiExpression& p, const std::vector<LatticePoint>& erosion_vertices,
             const Limits& limits = {});

  int n() const { return n_; }
  bool contains(std::span<const std::int64_t> x) const;
  bool contains(std::span<const Rational> x) const;

  const std::vector<std::vector<std::int64_t>>& normals() const { return normals_; }
  const std::vector<Int>& supports() const { return supports_; }

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> normals_;
  std::vector<Int> supports_;
  // 64-bit copies of the supports where they fit, for the hot integer path.
  std::vector<std::int64_t> support_fast_;
  std::vector<char> support_fits_;
};

bool contains(const MinkowskiExpression& p, std::span<const std::int64_t> x,
              const Limits& limits = {});
bool contains(const MinkowskiExpression& p, std::span<const Rational> x,
              const Limits& limits = {});

// All lattice points of P in lexicographic order, by scanning the bounding
// box and filtering through Membership.
std::vector<LatticePoint> lattice_points(const MinkowskiExpression& p,
                                         const Limits& limits = {});

// Lattice points of the Minkowski difference P ⊖ conv(V):
// {x in Z^n : x + v in P for all v in V}.  Passing the vertex set of the
// subtrahend suffices by convexity.
std::vector<LatticePoint> lattice_points_minus(const MinkowskiExpression& p,
                                               const std::vector<LatticePoint>& vertices,
                                               const Limits& limits = {});

// The 2^n corners of the unit cube of octant T (coordinate i ranges over
// {0, sign_T(i)}).
std::vector<LatticePoint> cube_corners(const OctantLabel& t);

// The vertices {0} ∪ {e_s : s in S} of the simplex D(S).
std::vector<LatticePoint> simplex_vertices(const AdmissibleSubset& s);
std::vector<LatticePoint> simplex_vertices(const OctantLabel& t);

// Exact Lagrange interpolation of |tP ∩ Z^n| through t = 0,...,n.
EhrhartPolynomial ehrhart_interpolate(const MinkowskiExpression& p,
                                      const Limits& limits = {});

// Leading coefficient of the interpolated Ehrhart polynomial.
Rational volume_oracle(const MinkowskiExpression& p, const Limits& limits = {});

}  // namespace bperm
