// Closed forms and skein recurrences for the Jones polynomials of T(2,2k)
// and of the pretzel family P(-(2s+1), 2s+1, 2i+1), plus the distinctness
// report that tells the family members apart.
#pragma once

#include "knot/laurent.hpp"

#include <vector>

namespace knot {

enum class JonesMethod { ClosedForm, SkeinRecurrence, Bracket };

struct JonesValue {
  HalfLaurent polynomial;
  JonesMethod provenance;
};

// V(T(2,2k)) = -t^(-1/2) (t^(-2k) + t^(-2k+2) + sum_{i=0}^{2k-3} (-1)^i t^-i),
// the empty sum making k = 1 the Hopf value. k >= 1.
JonesValue torus_jones(int k);

// Checks t^-1 V(T(2,2k)) - t V(T(2,2k+2)) + (t^(-1/2) - t^(1/2)) == 0 on the
// closed forms.
bool torus_jones_recurrence_check(int k);

// V(T(2,2k)) by iterating the skein step up from the Hopf base value.
JonesValue torus_jones_by_skein(int k);

// Closed form for P(-3,3,2i+1); i >= 3.
JonesValue pretzel_jones_s1(long long i);

// General closed form for P(-(2s+1),2s+1,2i+1); s >= 1, i >= s+2.
JonesValue pretzel_jones(int s, long long i);

// Same value computed by telescoping the difference recurrence
//   V(P(-(2u+1),2u+1,2i+1)) - V(P(-(2u-1),2u-1,2i+1))
//     = t^-1 (t^(1/2) - t^(-1/2)) (V(T(2,2i+2u)) - V(T(2,2i-2u)))
// down to the unknot at u = 0; s >= 1, i >= s+2.
JonesValue pretzel_jones_skein(int s, long long i);

// The telescoped evaluation extended to the edge index i = s+1, where the
// innermost torus term is the Hopf link. The closed forms above are only
// claimed for i >= s+2; this entry point exists to compare the edge case
// against the brute-force bracket.
JonesValue pretzel_jones_extended(int s, long long i);

// True when the closed form satisfies the difference recurrence at (s, i),
// with the unknot standing in for the s = 0 level.
bool pretzel_recurrence_check(int s, long long i);

struct DistinctnessReport {
  bool all_distinct = false;
  // minimal Jones exponent numerator per index, in order of increasing i;
  // strict decrease is the distinctness witness
  std::vector<int> min_exponent_nums;
};

// Pairwise distinctness of the closed-form Jones polynomials over
// i = i_first..i_last (inclusive); requires i_first >= s+2.
DistinctnessReport family_distinct(int s, long long i_first, long long i_last);

}  // namespace knot
