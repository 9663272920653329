// Elementary ideals of presentation matrices over Z[t, 1/t], with a
// decidable membership oracle for the ideals that arise from the pretzel
// families: each reduces to the kernel of an evaluation t -> c into Z/n.
// A bounded search for explicit combinations backs the oracle up for
// inputs outside that shape; when neither route certifies an answer the
// verdict is Undecided, never a guess.
#pragma once

#include "knot/laurent.hpp"

#include <optional>
#include <vector>

namespace knot {

struct IdealGens {
  std::vector<HalfLaurent> generators;  // zero generators are dropped

  IdealGens() = default;
  explicit IdealGens(std::vector<HalfLaurent> gens);
};

// The quotient Z[t,1/t] / (modulus, t - residue) = Z/modulus with
// t -> residue; requires gcd(residue, modulus) = 1.
struct LinearQuotient {
  Integer modulus;
  Integer residue;

  // f lies in the kernel ideal iff this is zero
  Integer image(const HalfLaurent& f) const { return eval_mod(f, modulus, residue); }
};

// Generators of E_k: all (n-k+1)x(n-k+1) minors of the n x n matrix M.
// k > n yields the unit ideal {1}. For n = 2 this makes E_1 = (det M)
// and E_2 the ideal of the entries.
IdealGens elementary_ideal(const LaurentMatrix& M, int k);

// Reduces a pair of integral generators of degree <= 1 to a LinearQuotient
// whose kernel is exactly the ideal (g1, g2). Returns nullopt when the pair
// does not have the required unimodular shape.
std::optional<LinearQuotient> linear_quotient_of(const HalfLaurent& g1, const HalfLaurent& g2);

// A quotient whose kernel equals the whole ideal, when some generator pair
// provides one under which every generator vanishes.
std::optional<LinearQuotient> linear_quotient_of(const IdealGens& I);

enum class Decision { Yes, No, Undecided };

struct SearchBounds {
  int max_coeff_degree = 8;  // degree bound on the combination coefficients
  int max_shift = 8;         // f is tested multiplied by t^N for N <= this
};

// Membership f in (generators) within the Laurent ring. Inputs must be
// integral. Yes is certified either by the quotient oracle or by an explicit
// combination; No only by a quotient non-vanishing.
Decision contains(const IdealGens& I, const HalfLaurent& f, const SearchBounds& bounds = {});

// The explicit-combination route on its own: searches for integral a_j and
// N <= bounds.max_shift with t^N f = sum a_j g_j. Yes means a combination
// was found and re-verified; Undecided means none within bounds.
Decision contains_by_search(const IdealGens& I, const HalfLaurent& f,
                            const SearchBounds& bounds = {});

// Mutual containment of generators.
Decision ideal_equal(const IdealGens& I, const IdealGens& J, const SearchBounds& bounds = {});

// k-th index of the constant-ideal subfamily: (2k-1)s + k - 1, which equals
// s + (k-1)(2s+1); membership is the congruence i = s (mod 2s+1).
long long subfamily_index(int s, int k);

}  // namespace knot
