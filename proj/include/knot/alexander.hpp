// Seifert and presentation matrices for three-odd-tassel pretzel knots,
// Alexander polynomials and the non-fibered obstruction.
#pragma once

#include "knot/laurent.hpp"

#include <array>

namespace knot {

// P(p, q, r) with every tassel an odd, nonzero signed half-twist count.
struct PretzelSpec {
  long long p;
  long long q;
  long long r;

  PretzelSpec(long long p_, long long q_, long long r_);

  // P(-(2s+1), 2s+1, 2i+1)
  static PretzelSpec family(int s, long long i);

  long long crossing_count() const;
  std::string str() const;
};

// The family P(-(2s+1), 2s+1, 2i+1) for fixed s, together with the values
// shared by all of its members.
struct FamilyDescriptor {
  int s;
  long long intro_coefficient;  // A = -s(s+1)
  HalfLaurent alexander;        // s(s+1)t^2 - (2s(s+1)+1)t + s(s+1)

  explicit FamilyDescriptor(int s_);
};

struct SeifertMatrix2 {
  std::array<std::array<long long, 2>, 2> v;

  // det(V - V^T), which is 1 for every valid Seifert pairing here
  long long transposition_determinant() const;
};

SeifertMatrix2 seifert_matrix(const PretzelSpec& spec);

// tV - V^T
LaurentMatrix presentation_matrix(const SeifertMatrix2& V);

// Determinant of the presentation matrix, normalized to the canonical
// representative of its unit class: integral, lowest exponent 0, positive
// leading coefficient.
HalfLaurent alexander_polynomial(const PretzelSpec& spec);

// Same normalization applied to an arbitrary nonzero polynomial.
HalfLaurent normalize_alexander(const HalfLaurent& delta);

// Closed form s(s+1)t^2 - (2s(s+1)+1)t + s(s+1); s >= 1.
HalfLaurent family_alexander(int s);

enum class FiberedVerdict { NotFibered, Inconclusive };

// A non-monic Alexander polynomial obstructs fiberedness; a monic one
// decides nothing.
FiberedVerdict fibered_obstruction(const HalfLaurent& delta);

}  // namespace knot
