#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bperm/counting.hpp"
#include "bperm/errors.hpp"
#include "bperm/expression.hpp"
#include "test_support.hpp"

using namespace bperm;
using bperm_test::expr;

namespace {

MinkowskiExpression running_example() {
  return expr(2, {{{1, 2}, 2}, {{-1, 2}, 1}, {{-2}, 1}});
}

MinkowskiExpression unit_square() {
  return expr(2, {{{1}, 1}, {{2}, 1}});
}

MinkowskiExpression triangle() {
  return expr(2, {{{1, 2}, 1}});
}

// Independent mixed-sign generator for formula cross-checks.
MinkowskiExpression random_instance(std::mt19937_64& rng, int n, int max_terms,
                                    bool allow_negative) {
  int m = 1 + static_cast<int>(rng() % max_terms);
  std::vector<Term> terms;
  for (int i = 0; i < m; ++i) {
    std::vector<int> entries;
    while (entries.empty())
      for (int c = 1; c <= n; ++c) {
        switch (rng() % 3) {
          case 0: entries.push_back(c); break;
          case 1: entries.push_back(-c); break;
          default: break;
        }
      }
    std::int64_t coeff = 1 + static_cast<std::int64_t>(rng() % 3);
    if (allow_negative && rng() % 3 == 0) coeff = -coeff;
    terms.push_back(Term{make_admissible(entries, n), coeff});
  }
  return MinkowskiExpression(n, std::move(terms));
}

}  // namespace

TEST_CASE("generalized binomials") {
  CHECK(gen_binomial(5, 2) == 10);
  CHECK(gen_binomial(3, 0) == 1);
  CHECK(gen_binomial(2, 5) == 0);
  CHECK(gen_binomial(0, 0) == 1);
  CHECK(gen_binomial(0, 1) == 0);
  CHECK(gen_binomial(-1, 2) == 1);
  CHECK(gen_binomial(-2, 3) == -4);
  for (int a = 0; a <= 6; ++a) CHECK(gen_binomial(-1, a) == ((a % 2) ? -1 : 1));

  CHECK(rising_binomial(2, 3) == 4);
  CHECK(rising_binomial(3, 2) == 6);
  CHECK(rising_binomial(1, 6) == 1);
  CHECK(rising_binomial(0, 0) == 1);
  CHECK(rising_binomial(0, 2) == 0);
  for (int y = -3; y <= 4; ++y)
    for (int a = 0; a <= 5; ++a) {
      Int sign = (a % 2) ? -1 : 1;
      CHECK(rising_binomial(y, a) == sign * gen_binomial(-y, a));
    }
}

TEST_CASE("type A count over a neighbor family") {
  GroundFamily f({{1, 2, 3}, {1, 2, 3}, {1, 3}}, ground_range(1, 3));
  std::vector<std::int64_t> ones{1, 1, 1};
  CHECK(count_type_a(f, ones) == 5);
  std::vector<std::int64_t> y{2, 1, 1};
  CHECK(count_type_a(f, y) == 9);

  std::vector<std::int64_t> wrong{1, 1};
  CHECK_THROWS_AS(count_type_a(f, wrong), Error);
}

TEST_CASE("shifted count of the running example") {
  ShiftedCount c = count_shifted_type_b(running_example());
  CHECK(c.total == 8);
  REQUIRE(c.octants.size() == 4);
  CHECK(c.octants[0].first.entries() == std::vector<int>{1, 2});
  CHECK(c.octants[0].second == 3);
  CHECK(c.octants[1].first.entries() == std::vector<int>{1, -2});
  CHECK(c.octants[1].second == 2);
  CHECK(c.octants[2].first.entries() == std::vector<int>{-1, 2});
  CHECK(c.octants[2].second == 2);
  CHECK(c.octants[3].first.entries() == std::vector<int>{-1, -2});
  CHECK(c.octants[3].second == 1);

  CHECK(count_multiplicity_form(running_example()) == 8);
  CHECK(transversal_count_shifted(running_example()) == 8);
}

TEST_CASE("shifted count handles cancelling and negative coefficients") {
  // 2*D{1} - D{1} describes the same segment as D{1}.
  MinkowskiExpression twice_minus_once = expr(1, {{{1}, 2}, {{1}, -1}});
  ShiftedCount c = count_shifted_type_b(twice_minus_once);
  CHECK(c.total == 1);
  CHECK(c.octants[0].second == 1);
  CHECK(c.octants[1].second == 0);
  CHECK(count_shifted_type_b(expr(1, {{{1}, 1}})).total == 1);

  // D{1} - D{1} is the origin; the eroded body is empty.
  CHECK(count_shifted_type_b(expr(1, {{{1}, 1}, {{1}, -1}})).total == 0);

  // The bare origin in dimension 1 erodes to nothing as well.
  CHECK(count_shifted_type_b(MinkowskiExpression::empty(1)).total == 0);
}

TEST_CASE("plain counts of small bodies") {
  CHECK(count_type_b(unit_square()) == 4);
  CHECK(count_type_b(triangle()) == 3);
  CHECK(count_type_b(MinkowskiExpression::empty(2)) == 1);
  CHECK(count_type_b(expr(2, {{{1}, 1}})) == 2);  // a segment has 2 points
}

TEST_CASE("ehrhart polynomials of the standard bodies") {
  EhrhartPolynomial square = ehrhart(unit_square());
  CHECK(square == EhrhartPolynomial{{Rational(1), Rational(2), Rational(1)}});
  CHECK(square.eval(2) == 9);
  CHECK(square.str() == "1, 2, 1");

  EhrhartPolynomial tri = ehrhart(triangle());
  CHECK(tri == EhrhartPolynomial{{Rational(1), Rational(3, 2), Rational(1, 2)}});
  CHECK(tri.str() == "1, 3/2, 1/2");
  CHECK(tri.eval(1) == 3);
  CHECK(tri.eval(2) == 6);
  CHECK(tri.eval(3) == 10);

  EhrhartPolynomial point = ehrhart(MinkowskiExpression::empty(2));
  CHECK(point == EhrhartPolynomial{{Rational(1), Rational(0), Rational(0)}});

  EhrhartPolynomial main = ehrhart(running_example());
  CHECK(main.constant_term() == 1);
  CHECK(main.leading_coeff() == Rational(19, 2));
  CHECK(main.eval(1) == count_type_b(running_example()));
  CHECK(main.n() == 2);
}

TEST_CASE("volumes") {
  CHECK(volume(running_example()) == Rational(19, 2));
  CHECK(volume(unit_square()) == 1);
  CHECK(volume(triangle()) == Rational(1, 2));
  CHECK(volume(MinkowskiExpression::empty(2)) == 0);
  CHECK(volume(expr(2, {{{1}, 1}})) == 0);  // lower-dimensional
  CHECK(volume(expr(2, {{{1, 2}, 1}, {{-1, 2}, 1}})) == 3);
  CHECK(volume(expr(2, {{{1}, 3}, {{2}, 2}})) == 6);
}

TEST_CASE("transversal counts of set tuples") {
  int n = 2;
  std::vector<AdmissibleSubset> disjoint{make_admissible({1}, n),
                                         make_admissible({2}, n)};
  CHECK(signed_transversal_count(disjoint) == 1);

  std::vector<AdmissibleSubset> repeated{make_admissible({1}, n),
                                         make_admissible({1}, n)};
  CHECK(signed_transversal_count(repeated) == 0);

  std::vector<AdmissibleSubset> crossing{make_admissible({1, 2}, n),
                                         make_admissible({-1, 2}, n)};
  CHECK(signed_transversal_count(crossing) == 2);

  std::vector<AdmissibleSubset> nested{make_admissible({1, 2}, n),
                                       make_admissible({2}, n)};
  CHECK(signed_transversal_count(nested) == 1);

  std::vector<AdmissibleSubset> one{make_admissible({1}, n)};
  CHECK_THROWS_AS(signed_transversal_count(one), Error);
  std::vector<AdmissibleSubset> mixed{make_admissible({1}, 1),
                                      make_admissible({1}, 2)};
  CHECK_THROWS_AS(signed_transversal_count(mixed), Error);
}

TEST_CASE("transversal sums match the octant sums") {
  CHECK(transversal_nvol(running_example()) == 19);
  CHECK(transversal_nvol(unit_square()) == 2);
  CHECK(transversal_nvol(expr(2, {{{1, 2}, 1}, {{-1, 2}, 1}})) == 6);
  CHECK(transversal_nvol(expr(1, {{{1}, 1}})) == 1);
  CHECK(transversal_count_shifted(unit_square()) == 1);

  Limits tiny;
  tiny.max_multisets = 1;
  CHECK_THROWS_AS(transversal_count_shifted(running_example(), tiny), Error);
  CHECK_THROWS_AS(transversal_nvol(running_example(), tiny), Error);
}

TEST_CASE("all count forms agree on random instances") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    MinkowskiExpression p = random_instance(rng, n, 4, trial % 2 == 1);

    ShiftedCount shifted = count_shifted_type_b(p);
    CHECK(shifted.total == count_multiplicity_form(p));
    CHECK(shifted.total == transversal_count_shifted(p));

    Rational vol = volume(p);
    CHECK(Rational(transversal_nvol(p)) == vol * factorial(n));

    EhrhartPolynomial e = ehrhart(p);
    CHECK(e.constant_term() == 1);
    CHECK(e.leading_coeff() == vol);
    CHECK(e.eval(1) == count_type_b(p));

    // Appending a cancelling pair is invisible to every formula.
    std::vector<Term> padded(p.terms().begin(), p.terms().end());
    padded.push_back(Term{p.terms()[0].set, 1});
    padded.push_back(Term{p.terms()[0].set, -1});
    MinkowskiExpression q(n, padded);
    ShiftedCount shifted_q = count_shifted_type_b(q);
    CHECK(shifted_q.total == shifted.total);
    for (std::size_t i = 0; i < shifted.octants.size(); ++i)
      CHECK(shifted_q.octants[i].second == shifted.octants[i].second);
    CHECK(volume(q) == vol);
    CHECK(ehrhart(q) == e);
  }
}

TEST_CASE("ehrhart matches dilated recounts") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng() % 2);
    MinkowskiExpression p = random_instance(rng, n, 3, false);
    EhrhartPolynomial e = ehrhart(p);
    for (std::int64_t t = 0; t <= 3; ++t)
      CHECK(e.eval(t) == count_type_b(p.dilated(t)));
  }
}
