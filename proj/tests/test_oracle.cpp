#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bperm/counting.hpp"
#include "bperm/errors.hpp"
#include "bperm/oracle.hpp"
#include "test_support.hpp"

using namespace bperm;
using bperm_test::expr;
using bperm_test::octant;
using bperm_test::sorted;

namespace {

MinkowskiExpression running_example() {
  return expr(2, {{{1, 2}, 2}, {{-1, 2}, 1}, {{-2}, 1}});
}

MinkowskiExpression unit_square() {
  return expr(2, {{{1}, 1}, {{2}, 1}});
}

std::vector<std::int64_t> pt(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

TEST_CASE("membership by support inequalities") {
  Membership m(running_example());
  CHECK(m.n() == 2);
  CHECK(m.normals().size() == 8);  // 3^2 - 1

  CHECK(m.contains(pt({1, 2})));
  CHECK(!m.contains(pt({2, 2})));
  CHECK(m.contains(pt({-1, -1})));
  CHECK(m.contains(pt({2, 1})));
  CHECK(!m.contains(pt({-2, 0})));
  CHECK(!m.contains(pt({0, 4})));

  std::vector<Rational> inside{Rational(1, 2), Rational(1, 2)};
  CHECK(m.contains(inside));
  std::vector<Rational> outside{Rational(5, 2), Rational(1)};
  CHECK(!m.contains(outside));
  std::vector<Rational> edge{Rational(2), Rational(1)};
  CHECK(m.contains(edge));  // boundary points belong to the closed body

  std::vector<std::int64_t> wrong{1};
  CHECK_THROWS_AS(m.contains(wrong), Error);
  CHECK_THROWS_AS(Membership(expr(2, {{{1}, -1}})), Error);
}

TEST_CASE("the dimension guard protects the scans") {
  std::vector<Term> terms{Term{make_admissible({1}, 9), 1}};
  MinkowskiExpression p(9, terms);
  CHECK_THROWS_AS(Membership{p}, Error);

  Limits wide;
  wide.max_oracle_dim = 9;
  CHECK(Membership(p, wide).contains(pt({0, 0, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("lattice point scans come out in lexicographic order") {
  CHECK(lattice_points(expr(2, {{{1, 2}, 1}})) ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});

  MinkowskiExpression low = restrict(running_example(), octant({-1, -2}, 2)).to_expression();
  CHECK(lattice_points(low) ==
        std::vector<LatticePoint>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});

  CHECK(lattice_points(MinkowskiExpression::empty(2)) ==
        std::vector<LatticePoint>{{0, 0}});

  CHECK(Int(lattice_points(running_example()).size()) ==
        count_type_b(running_example()));
}

TEST_CASE("cube corners and simplex vertices") {
  CHECK(sorted(cube_corners(octant({1, -2}, 2))) ==
        std::vector<LatticePoint>{{0, -1}, {0, 0}, {1, -1}, {1, 0}});
  CHECK(cube_corners(octant({1}, 1)).size() == 2);

  CHECK(sorted(simplex_vertices(make_admissible({1, -2}, 2))) ==
        std::vector<LatticePoint>{{0, -1}, {0, 0}, {1, 0}});
  CHECK(sorted(simplex_vertices(octant({-1, 2}, 2))) ==
        std::vector<LatticePoint>{{-1, 0}, {0, 0}, {0, 1}});
}

TEST_CASE("unit-cube erosion of the running example") {
  auto points = lattice_points_minus(running_example(),
                                     cube_corners(octant({1, 2}, 2)));
  CHECK(points == std::vector<LatticePoint>{{-1, -1}, {-1, 0}, {-1, 1},
                                            {0, -1}, {0, 0}, {0, 1},
                                            {1, -1}, {1, 0}});
  CHECK(Int(points.size()) == count_shifted_type_b(running_example()).total);

  CHECK(lattice_points_minus(unit_square(), cube_corners(octant({1, 2}, 2))) ==
        std::vector<LatticePoint>{{0, 0}});

  // Eroding conv(0, 2e1, 2e2) by the cube: the far corner forces x1+x2 <= 0.
  CHECK(lattice_points_minus(expr(2, {{{1, 2}, 2}}), cube_corners(octant({1, 2}, 2))) ==
        std::vector<LatticePoint>{{0, 0}});
  // Eroding by the simplex vertices instead only forces x1+x2 <= 1.
  CHECK(lattice_points_minus(expr(2, {{{1, 2}, 2}}), simplex_vertices(make_admissible({1, 2}, 2))) ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});

  CHECK_THROWS_AS(lattice_points_minus(unit_square(), {}), Error);
  CHECK_THROWS_AS(lattice_points_minus(unit_square(), {{0, 0, 0}}), Error);
}

TEST_CASE("erosion by a simplex in dimension three") {
  MinkowskiExpression p = expr(3, {{{1, 2, 3}, 2}, {{1, 3}, 1}});
  std::vector<LatticePoint> simplex{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(lattice_points_minus(p, simplex) ==
        std::vector<LatticePoint>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2},
                                  {0, 1, 0}, {0, 1, 1}, {1, 0, 0},
                                  {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
}

TEST_CASE("a planar slice reproduces the classical five-point list") {
  // The 3-set neighbor family ({1,2,3},{1,2,3},{1,3}) describes a body in the
  // plane x1+x2+x3 = 3; dropping the first coordinate gives this sum, and the
  // five surviving shifted points map back onto the known triples.
  MinkowskiExpression p = expr(2, {{{1, 2}, 1}, {{1, 2}, 1}, {{2}, 1}});
  auto points = lattice_points_minus(p, simplex_vertices(make_admissible({1, 2}, 2)));
  CHECK(points == std::vector<LatticePoint>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}});

  std::vector<LatticePoint> lifted;
  for (const auto& q : points) lifted.push_back({2 - q[0] - q[1], q[0], q[1]});
  std::vector<LatticePoint> known{{2, 0, 0}, {1, 0, 1}, {1, 1, 0}, {0, 0, 2}, {0, 1, 1}};
  CHECK(sorted(lifted) == sorted(known));
}

TEST_CASE("interpolation through small dilations") {
  CHECK(ehrhart_interpolate(expr(2, {{{1, 2}, 1}})) ==
        EhrhartPolynomial{{Rational(1), Rational(3, 2), Rational(1, 2)}});
  CHECK(ehrhart_interpolate(unit_square()) ==
        EhrhartPolynomial{{Rational(1), Rational(2), Rational(1)}});
  CHECK(ehrhart_interpolate(running_example()) == ehrhart(running_example()));
  CHECK(volume_oracle(running_example()) == Rational(19, 2));
  CHECK(volume_oracle(expr(2, {{{1}, 1}})) == 0);
}

TEST_CASE("the box budget rejects oversized scans") {
  CHECK_THROWS_AS(lattice_points(expr(2, {{{1, 2}, 1'000'000}})), Error);
  Limits small;
  small.max_box_points = 3;
  CHECK_THROWS_AS(lattice_points(unit_square(), small), Error);
}
