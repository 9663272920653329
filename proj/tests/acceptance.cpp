// Acceptance suite: one check per criterion, each printed as a pass/fail
// line with its runtime. All comparisons are exact; the stated runtime
// budgets are enforced as part of the verdicts. Exits nonzero when any
// criterion fails.
#include "knot/alexander.hpp"
#include "knot/bracket.hpp"
#include "knot/diagram.hpp"
#include "knot/ideals.hpp"
#include "knot/jones.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

using namespace knot;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }

  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

HalfLaurent P(const char* s) { return HalfLaurent::parse(s); }

IdealGens e2_base(int s) {
  return IdealGens({HalfLaurent::monomial(s + 1, 2) - HalfLaurent::constant(s),
                    HalfLaurent::monomial(s, 2) - HalfLaurent::constant(s + 1)});
}

// 1. Alexander constancy for P(-3,3,2i+1), i = 1..50.
Outcome criterion_alexander_constancy() {
  Outcome out;
  HalfLaurent expected = P("2*t^2 - 5*t + 2");
  for (long long i = 1; i <= 50; ++i) {
    HalfLaurent delta = alexander_polynomial(PretzelSpec(-3, 3, 2 * i + 1));
    out.require(delta == expected, "delta differs at i=" + std::to_string(i));
  }
  return out;
}

// 2. General family closed form with symmetry and evaluations.
Outcome criterion_alexander_family() {
  Outcome out;
  for (int s = 1; s <= 10; ++s) {
    HalfLaurent closed = family_alexander(s);
    for (long long i = s + 1; i <= s + 40; ++i) {
      HalfLaurent delta = alexander_polynomial(PretzelSpec::family(s, i));
      out.require(delta == closed,
                  "closed form fails at s=" + std::to_string(s) + " i=" + std::to_string(i));
    }
    out.require(equals_up_to_unit(closed, closed.mirrored()).has_value(),
                "not symmetric at s=" + std::to_string(s));
    out.require(boost::multiprecision::abs(eval_at_one(closed)) == 1,
                "|delta(1)| != 1 at s=" + std::to_string(s));
    out.require(eval_at_minus_one(closed) == Integer(2 * s + 1) * (2 * s + 1),
                "delta(-1) != (2s+1)^2 at s=" + std::to_string(s));
  }
  return out;
}

// 3. Elementary ideals via the finite-quotient oracle, with the printed
//    index-rule discrepancy recorded.
Outcome criterion_elementary_ideals() {
  Outcome out;
  for (int s = 1; s <= 5; ++s) {
    IdealGens base = e2_base(s);
    auto quotient = linear_quotient_of(base);
    out.require(quotient.has_value() && quotient->modulus == 2 * s + 1 &&
                    quotient->residue == 2 * s,
                "base quotient is not Z/(2s+1), t -> -1 at s=" + std::to_string(s));

    std::map<long long, int> negative_by_residue;
    for (long long i = s + 1; i <= s + 50; ++i) {
      LaurentMatrix m = presentation_matrix(seifert_matrix(PretzelSpec::family(s, i)));
      Decision equal = ideal_equal(elementary_ideal(m, 2), base);
      bool expect = (i - s) % (2 * s + 1) == 0;
      out.require(equal == (expect ? Decision::Yes : Decision::No),
                  "ideal equality mismatch at s=" + std::to_string(s) +
                      " i=" + std::to_string(i));
      if (equal == Decision::No) ++negative_by_residue[i % (2 * s + 1)];
    }
    for (long long r = 0; r < 2 * s + 1; ++r)
      if (r != s % (2 * s + 1))
        out.require(negative_by_residue[r] >= 1,
                    "missing negative instance in residue class " + std::to_string(r));
  }

  IdealGens base1 = e2_base(1);
  out.require(contains(base1, P("3*t - 3")) == Decision::Yes, "3t-3 not a member");
  out.require(contains_by_search(base1, P("3*t - 3")) == Decision::Yes,
              "no explicit combination found for 3t-3");

  // the two printed index rules at s = 1: i_k = 3k-2 (i = 1 mod 3) and
  // i_k = 3k-1 (i = 2 mod 3); the matrices decide between them
  bool matches_3k_minus_2 = true, matches_3k_minus_1 = true;
  for (long long i = 1; i <= 50; ++i) {
    LaurentMatrix m = presentation_matrix(seifert_matrix(PretzelSpec(-3, 3, 2 * i + 1)));
    bool equal = ideal_equal(elementary_ideal(m, 2), base1) == Decision::Yes;
    matches_3k_minus_2 = matches_3k_minus_2 && equal == (i % 3 == 1);
    matches_3k_minus_1 = matches_3k_minus_1 && equal == (i % 3 == 2);
  }
  out.require(matches_3k_minus_2 != matches_3k_minus_1,
              "index rules do not disagree as expected");
  out.note(std::string("printed index rules 3k-1 and 3k-2 conflict; matrices satisfy ") +
           (matches_3k_minus_2 ? "i_k=3k-2 (i = s mod 2s+1)" : "i_k=3k-1"));
  return out;
}

// 4. Torus closed form, recurrence, and value at 1.
Outcome criterion_torus_closed_form() {
  Outcome out;
  out.require(torus_jones(1).polynomial == P("-1*t^(-5/2) - 1*t^(-1/2)"), "k=1 value");
  out.require(torus_jones(2).polynomial ==
                  P("-1*t^(-9/2) - 1*t^(-5/2) + 1*t^(-3/2) - 1*t^(-1/2)"),
              "k=2 value");
  for (int k = 1; k <= 30; ++k) {
    out.require(torus_jones_recurrence_check(k), "recurrence fails at k=" + std::to_string(k));
    out.require(eval_at_one(torus_jones(k).polynomial) == -2,
                "V(1) != -2 at k=" + std::to_string(k));
  }
  return out;
}

// 5. s = 1 pretzel closed form vs the printed value, the skein evaluation,
//    and the general form.
Outcome criterion_pretzel_s1() {
  Outcome out;
  out.require(pretzel_jones_s1(3).polynomial ==
                  P("t^-10 - t^-9 + t^-8 - 2*t^-7 + t^-6 - t^-5 + t^-4 + 1"),
              "printed value at i=3");
  for (long long i = 3; i <= 30; ++i) {
    HalfLaurent closed = pretzel_jones_s1(i).polynomial;
    out.require(pretzel_jones_skein(1, i).polynomial == closed,
                "skein differs at i=" + std::to_string(i));
    out.require(pretzel_jones(1, i).polynomial == closed,
                "general form differs at i=" + std::to_string(i));
  }
  return out;
}

// 6. The general closed form satisfies its difference recurrence.
Outcome criterion_difference_recurrence() {
  Outcome out;
  for (int s = 1; s <= 8; ++s)
    for (long long i = s + 2; i <= s + 20; ++i)
      out.require(pretzel_recurrence_check(s, i),
                  "recurrence fails at s=" + std::to_string(s) + " i=" + std::to_string(i));
  return out;
}

// 7. Brute-force bracket oracle agreement, single-threaded, with the
//    diagram-pipeline calibration values.
Outcome criterion_bracket_oracle() {
  Outcome out;
  out.require(jones_from_bracket_serial(torus2_diagram(TorusSpec(2))) ==
                  torus_jones(1).polynomial,
              "Hopf calibration");
  out.require(jones_from_bracket_serial(torus2_diagram(TorusSpec(4))) ==
                  torus_jones(2).polynomial,
              "T(2,4) calibration");

  struct Case {
    int s;
    long long i;
  };
  // P(-7,7,11) would need 25 crossings, over the budget of 24; its stand-in
  // is P(-7,7,9) at 23 crossings, whose index i = s+1 sits one step below
  // the closed-form domain and is evaluated by the telescoped skein route.
  const std::vector<Case> cases = {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}};
  for (const auto& c : cases) {
    PretzelSpec spec = PretzelSpec::family(c.s, c.i);
    if (spec.crossing_count() > 24) {
      out.require(false, spec.str() + " exceeds the crossing budget");
      continue;
    }
    HalfLaurent expected = c.i >= c.s + 2 ? pretzel_jones(c.s, c.i).polynomial
                                          : pretzel_jones_extended(c.s, c.i).polynomial;
    out.require(jones_from_bracket_serial(pretzel_diagram(spec)) == expected,
                "bracket disagrees for " + spec.str());
  }

  // the OpenMP kernel must reproduce the reference on the largest case
  OrientedDiagram largest = pretzel_diagram(PretzelSpec::family(3, 4));
  out.require(kauffman_bracket(largest) == kauffman_bracket_serial(largest),
              "parallel kernel differs from the serial reference");
  return out;
}

// 8. Distinctness within each family via the minimal-exponent witness.
Outcome criterion_distinctness() {
  Outcome out;
  for (int s = 1; s <= 5; ++s) {
    DistinctnessReport report = family_distinct(s, s + 2, 100);
    out.require(report.all_distinct, "collision at s=" + std::to_string(s));
    for (size_t j = 1; j < report.min_exponent_nums.size(); ++j)
      out.require(report.min_exponent_nums[j] < report.min_exponent_nums[j - 1],
                  "minimal exponent not strictly decreasing at s=" + std::to_string(s));
  }
  return out;
}

// 9. |V(-1)| = |delta(-1)| = (2s+1)^2 across the shared grid.
Outcome criterion_cross_invariant() {
  Outcome out;
  for (int s = 1; s <= 10; ++s) {
    Integer expected = Integer(2 * s + 1) * (2 * s + 1);
    for (long long i = s + 2; i <= s + 40; ++i) {
      Integer v = eval_at_minus_one(pretzel_jones(s, i).polynomial);
      Integer d = eval_at_minus_one(alexander_polynomial(PretzelSpec::family(s, i)));
      out.require(boost::multiprecision::abs(v) == expected &&
                      boost::multiprecision::abs(d) == expected,
                  "determinant mismatch at s=" + std::to_string(s) + " i=" + std::to_string(i));
    }
  }
  return out;
}

// 10. Non-fibered obstruction across the families.
Outcome criterion_not_fibered() {
  Outcome out;
  for (int s = 1; s <= 10; ++s)
    out.require(fibered_obstruction(family_alexander(s)) == FiberedVerdict::NotFibered,
                "family s=" + std::to_string(s) + " not flagged");
  return out;
}

// 11. Property suites: R1 invariance, ring axioms, diagram invariants.
Outcome criterion_properties() {
  Outcome out;

  std::mt19937 rng(20240317);
  std::vector<OrientedDiagram> seeds;
  seeds.push_back(pretzel_diagram(PretzelSpec(-1, 1, 3)));
  seeds.push_back(pretzel_diagram(PretzelSpec(-3, 3, 3)));
  seeds.push_back(torus2_diagram(TorusSpec(2)));
  seeds.push_back(torus2_diagram(TorusSpec(4)));
  int insertions = 0;
  for (const auto& seed : seeds) {
    HalfLaurent expected = jones_from_bracket(seed);
    OrientedDiagram d = seed;
    for (int step = 0; step < 5; ++step, ++insertions) {
      int sign = rng() % 2 == 0 ? 1 : -1;
      d = add_kink(d, sign, static_cast<ArcId>(rng() % d.arc_count()));
      out.require(jones_from_bracket(d) == expected, "R1 invariance broken");
      out.require(d.component_count() == seed.component_count(), "component count changed");
    }
  }
  out.require(insertions == 20, "expected 20 kink insertions");

  auto random_poly = [&rng]() {
    HalfLaurent p;
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) p += HalfLaurent::monomial(coeff(rng), exp(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    HalfLaurent a = random_poly(), b = random_poly(), c = random_poly();
    out.require(a + b == b + a, "addition not commutative");
    out.require(a * b == b * a, "multiplication not commutative");
    out.require((a + b) + c == a + (b + c), "addition not associative");
    out.require((a * b) * c == a * (b * c), "multiplication not associative");
    out.require(a * (b + c) == a * b + a * c, "multiplication not distributive");
  }

  std::vector<OrientedDiagram> generated;
  for (long long r : {3, 5, 9}) generated.push_back(pretzel_diagram(PretzelSpec(-3, 3, r)));
  for (long long r : {5, 9}) generated.push_back(pretzel_diagram(PretzelSpec(-5, 5, r)));
  for (int n : {2, 4, 6, 8}) generated.push_back(torus2_diagram(TorusSpec(n)));
  for (const auto& d : generated) {
    std::map<ArcId, int> degree;
    for (const auto& x : d.crossings())
      for (ArcId a : x.arc) ++degree[a];
    bool degrees_ok = static_cast<int>(degree.size()) == d.arc_count();
    for (const auto& [arc, deg] : degree) degrees_ok = degrees_ok && deg == 2;
    out.require(degrees_ok, "arc degree invariant broken for " + d.source());
    int expected_components = d.source()[0] == 'P' ? 1 : 2;
    out.require(d.component_count() == expected_components,
                "component count wrong for " + d.source());
  }
  return out;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
    double budget_ms;
  };

  const std::vector<Criterion> criteria = {
      {1, "alexander constancy", criterion_alexander_constancy, 1000},
      {2, "alexander family closed form", criterion_alexander_family, 2000},
      {3, "elementary ideals", criterion_elementary_ideals, 2000},
      {4, "torus closed form", criterion_torus_closed_form, 1000},
      {5, "pretzel closed form s=1", criterion_pretzel_s1, 1000},
      {6, "difference recurrence", criterion_difference_recurrence, 2000},
      {7, "bracket oracle agreement", criterion_bracket_oracle, 60000},
      {8, "distinctness", criterion_distinctness, 2000},
      {9, "cross-invariant consistency", criterion_cross_invariant, 1000},
      {10, "non-fibered obstruction", criterion_not_fibered, 1000},
      {11, "property suites", criterion_properties, 10000},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms >= c.budget_ms) {
      out.pass = false;
      out.note("over runtime budget");
    }
    all_pass = all_pass && out.pass;
    std::ostringstream line;
    line << "criterion " << c.number << " (" << c.name << "): "
         << (out.pass ? "PASS" : "FAIL");
    if (!out.detail.empty()) line << " [" << out.detail << "]";
    line << " (" << static_cast<long long>(ms) << " ms, budget "
         << static_cast<long long>(c.budget_ms) << " ms)";
    std::cout << line.str() << "\n";
  }
  std::cout << (all_pass ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return all_pass ? 0 : 1;
}
