#include "bperm/verify.hpp"

#include <algorithm>

#include "bperm/bridge.hpp"
#include "bperm/counting.hpp"
#include "bperm/draconian.hpp"
#include "bperm/errors.hpp"
#include "bperm/numeric.hpp"
#include "bperm/oracle.hpp"

namespace bperm {

namespace {

void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
            const std::string& detail_on_fail) {
  out.push_back(CheckResult{name, pass, pass ? "" : detail_on_fail});
}

OctantLabel positive_octant(int n) {
  return OctantLabel(std::vector<int>(n, 1));
}

// The formula-only identities, valid for coefficients of any sign.
void formula_checks(const MinkowskiExpression& p, const Limits& limits,
                    std::vector<CheckResult>& out) {
  const ShiftedCount shifted = count_shifted_type_b(p, limits);
  const Int multiplicity = count_multiplicity_form(p, limits);
  const Int transversal = transversal_count_shifted(p, limits);
  report(out, "count-agreement",
         shifted.total == multiplicity && shifted.total == transversal,
         "octant form " + to_decimal(shifted.total) + ", multiplicity form " +
             to_decimal(multiplicity) + ", transversal form " + to_decimal(transversal));

  const Rational vol = volume(p, limits);
  const Int nvol = transversal_nvol(p, limits);
  report(out, "nvol-identity", Rational(nvol) == Rational(factorial(p.n())) * vol,
         "transversal NVol " + to_decimal(nvol) + " vs n! * volume = " +
             to_fraction(Rational(factorial(p.n())) * vol));

  const EhrhartPolynomial poly = ehrhart(p, limits);
  report(out, "ehrhart-constant", poly.constant_term() == 1,
         "constant term " + to_fraction(poly.constant_term()));
  report(out, "ehrhart-lead-volume", poly.leading_coeff() == vol,
         "leading coefficient " + to_fraction(poly.leading_coeff()) + " vs volume " +
             to_fraction(vol));

  // Per octant, the carrier family (target n, slack 0) and the lifted
  // neighbor family over {0,...,n} (target n, slack 1) admit the same
  // sequences.
  bool agree = true;
  std::string where;
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    auto carriers = restrict(p, t).carriers();
    GroundFamily direct(carriers, ground_range(1, p.n()), limits);
    for (auto& c : carriers) c.push_back(0);
    GroundFamily lifted(carriers, ground_range(0, p.n()), limits);
    if (enumerate_draconian(direct, p.n(), 0, limits) !=
        enumerate_draconian(lifted, p.n(), 1, limits)) {
      agree = false;
      where = "octant " + t.str();
      break;
    }
  }
  report(out, "lifted-family-agreement", agree, where);

  // Representation invariance: merging duplicates and inserting a cancelling
  // +1/-1 pair both leave every reported quantity unchanged.
  auto quantities_equal = [&](const MinkowskiExpression& q, std::string& detail) {
    const ShiftedCount qs = count_shifted_type_b(q, limits);
    if (qs.total != shifted.total) {
      detail = "shifted count " + to_decimal(qs.total) + " vs " + to_decimal(shifted.total);
      return false;
    }
    if (ehrhart(q, limits) != poly) {
      detail = "ehrhart coefficients changed";
      return false;
    }
    if (volume(q, limits) != vol) {
      detail = "volume changed";
      return false;
    }
    return true;
  };
  std::string detail;
  report(out, "merge-invariance", quantities_equal(p.merged(), detail), detail);

  std::vector<Term> padded = p.terms();
  const AdmissibleSubset filler =
      p.term_count() > 0 ? p.terms()[0].set : make_admissible({1}, p.n());
  padded.push_back(Term{filler, 1});
  padded.push_back(Term{filler, -1});
  detail.clear();
  report(out, "cancel-invariance",
         quantities_equal(MinkowskiExpression(p.n(), padded), detail), detail);
}

// Everything that needs the geometric oracle; only for nonnegative
// coefficients within the oracle dimension guard.
void oracle_checks(const MinkowskiExpression& p, const Limits& limits, std::mt19937_64& rng,
                   std::vector<CheckResult>& out) {
  const ShiftedCount shifted = count_shifted_type_b(p, limits);
  const std::vector<LatticePoint> points = lattice_points(p, limits);
  const std::vector<LatticePoint> shifted_points =
      lattice_points_minus(p, cube_corners(positive_octant(p.n())), limits);

  report(out, "oracle-shifted-count",
         shifted.total == Int(shifted_points.size()),
         "formula " + to_decimal(shifted.total) + " vs oracle " +
             std::to_string(shifted_points.size()));
  report(out, "oracle-count", count_type_b(p, limits) == Int(points.size()),
         "formula " + to_decimal(count_type_b(p, limits)) + " vs oracle " +
             std::to_string(points.size()));
  report(out, "oracle-ehrhart", ehrhart(p, limits) == ehrhart_interpolate(p, limits),
         "formula and interpolated Ehrhart coefficients differ");

  // The restriction to an octant is exactly the points of P with that sign
  // pattern.
  bool restriction_ok = true;
  std::string where;
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    std::vector<LatticePoint> filtered;
    for (const LatticePoint& x : points) {
      bool in_octant = true;
      for (int i = 1; i <= p.n() && in_octant; ++i)
        in_octant = t.sign(i) * x[i - 1] >= 0;
      if (in_octant) filtered.push_back(x);
    }
    if (lattice_points(restrict(p, t).to_expression(), limits) != filtered) {
      restriction_ok = false;
      where = "octant " + t.str();
      break;
    }
  }
  report(out, "octant-restriction", restriction_ok, where);

  // Per-octant identities, on the unit expansion when it stays within the
  // term guard.
  std::int64_t total_weight = 0;
  for (const Term& t : p.terms()) total_weight += t.coeff;
  if (total_weight <= limits.max_terms) {
    const MinkowskiExpression expanded = p.unit_expanded();
    bool capped_ok = true;
    std::string capped_detail;
    for (const OctantLabel& t : all_octants(p.n(), limits)) {
      GroundFamily family(restrict(expanded, t).carriers(), ground_range(1, p.n()), limits);
      const std::size_t formula = draconian_capped(family, p.n(), 0, limits).size();
      const std::size_t oracle =
          lattice_points_minus(restrict(p, t).to_expression(), cube_corners(t), limits)
              .size();
      if (formula != oracle) {
        capped_ok = false;
        capped_detail = "octant " + t.str() + ": capped " + std::to_string(formula) +
                        " vs oracle " + std::to_string(oracle);
        break;
      }
    }
    report(out, "octant-capped-identity", capped_ok, capped_detail);
  }

  // The lifted-graph count against the oracle count of P_T minus the octant
  // simplex.
  bool bridge_ok = true;
  std::string bridge_detail;
  for (const OctantLabel& t : all_octants(p.n(), limits)) {
    BipartiteGraph g = graph_of_octant(p, t);
    GroundFamily family(g.neighbors, ground_range(0, p.n()), limits);
    std::vector<std::int64_t> y;
    for (const Term& term : p.terms()) y.push_back(term.coeff);
    const Int formula = count_type_a(family, y, limits);
    const std::size_t oracle =
        lattice_points_minus(restrict(p, t).to_expression(), simplex_vertices(t), limits)
            .size();
    if (formula != Int(oracle)) {
      bridge_ok = false;
      bridge_detail = "octant " + t.str() + ": lifted count " + to_decimal(formula) +
                      " vs oracle " + std::to_string(oracle);
      break;
    }
  }
  report(out, "bridge-count", bridge_ok, bridge_detail);

  // Coordinatewise shrinking never leaves the polytope.
  if (!points.empty()) {
    Membership oracle(p, limits);
    bool shrink_ok = true;
    std::string shrink_detail;
    for (int trial = 0; trial < 5 && shrink_ok; ++trial) {
      const LatticePoint& x = points[rng() % points.size()];
      std::vector<Rational> scaled(p.n());
      for (int i = 0; i < p.n(); ++i) {
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 4);
        const std::int64_t num = static_cast<std::int64_t>(rng() % (den + 1));
        scaled[i] = Rational(x[i]) * Rational(num, den);
      }
      if (!oracle.contains(scaled)) {
        shrink_ok = false;
        shrink_detail = "shrunk image of a lattice point fell outside";
      }
    }
    report(out, "shrink-closure", shrink_ok, shrink_detail);
  }
}

}  // namespace

std::vector<CheckResult> verify_expression(const MinkowskiExpression& p,
                                           const VerifyOptions& options) {
  std::vector<CheckResult> out;
  formula_checks(p, options.limits, out);
  if (p.all_nonnegative() && p.n() <= options.limits.max_oracle_dim) {
    std::mt19937_64 rng(options.seed);
    oracle_checks(p, options.limits, rng, out);
  }
  return out;
}

std::vector<CheckResult> run_verification(const MinkowskiExpression& p,
                                          const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const CheckResult& r : verify_expression(p, options))
    out.push_back(CheckResult{"input/" + r.name, r.pass, r.detail});

  std::mt19937_64 rng(options.seed);
  const int max_terms = std::max(3, p.term_count());
  for (unsigned k = 1; k <= options.trials; ++k) {
    MinkowskiExpression trial = random_expression(rng, p.n(), max_terms, 3);
    VerifyOptions per_trial = options;
    per_trial.seed = rng();
    std::string prefix = "trial" + std::to_string(k) + "/";
    for (const CheckResult& r : verify_expression(trial, per_trial))
      out.push_back(CheckResult{prefix + r.name, r.pass, r.detail});
  }
  return out;
}

MinkowskiExpression random_expression(std::mt19937_64& rng, int n, int max_terms,
                                      int max_coeff) {
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  std::vector<Term> terms;
  for (int i = 0; i < m; ++i) {
    std::vector<int> values;
    do {
      values.clear();
      for (int c = 1; c <= n; ++c) {
        switch (rng() % 3) {
          case 0: values.push_back(c); break;
          case 1: values.push_back(-c); break;
          default: break;
        }
      }
    } while (values.empty());
    const std::int64_t coeff = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_coeff));
    terms.push_back(Term{AdmissibleSubset(values, n), coeff});
  }
  return MinkowskiExpression(n, std::move(terms));
}

}  // namespace bperm
