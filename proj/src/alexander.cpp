#include "knot/alexander.hpp"

#include <cstdlib>
#include <sstream>

namespace knot {

PretzelSpec::PretzelSpec(long long p_, long long q_, long long r_) : p(p_), q(q_), r(r_) {
  for (long long v : {p, q, r}) {
    if (v == 0) throw std::invalid_argument("pretzel tassel must be nonzero");
    if (v % 2 == 0) throw std::invalid_argument("pretzel tassel must be odd");
  }
}

PretzelSpec PretzelSpec::family(int s, long long i) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  if (i < 1) throw std::invalid_argument("family parameter i must be >= 1");
  return PretzelSpec(-(2LL * s + 1), 2LL * s + 1, 2 * i + 1);
}

long long PretzelSpec::crossing_count() const {
  return std::llabs(p) + std::llabs(q) + std::llabs(r);
}

std::string PretzelSpec::str() const {
  std::ostringstream os;
  os << "P(" << p << "," << q << "," << r << ")";
  return os.str();
}

FamilyDescriptor::FamilyDescriptor(int s_) : s(s_) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  intro_coefficient = -static_cast<long long>(s) * (s + 1);
  alexander = family_alexander(s);
}

long long SeifertMatrix2::transposition_determinant() const {
  // V - V^T has zero diagonal, so the determinant is (v01 - v10)^2
  long long b = v[0][1] - v[1][0];
  return b * b;
}

SeifertMatrix2 seifert_matrix(const PretzelSpec& spec) {
  return SeifertMatrix2{{{{(spec.p + spec.q) / 2, (spec.q + 1) / 2},
                          {(spec.q - 1) / 2, (spec.q + spec.r) / 2}}}};
}

LaurentMatrix presentation_matrix(const SeifertMatrix2& V) {
  LaurentMatrix m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      m.at(r, c) = HalfLaurent::monomial(V.v[r][c], 2) - HalfLaurent::constant(V.v[c][r]);
  return m;
}

HalfLaurent normalize_alexander(const HalfLaurent& delta) {
  if (delta.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  HalfLaurent shifted = delta.shifted(-delta.min_exponent_num());
  if (shifted.leading_coefficient() < 0) return -shifted;
  return shifted;
}

HalfLaurent alexander_polynomial(const PretzelSpec& spec) {
  HalfLaurent det = presentation_matrix(seifert_matrix(spec)).determinant();
  if (det.is_zero()) throw std::domain_error("degenerate presentation matrix");
  HalfLaurent delta = normalize_alexander(det);
  if (!delta.is_integral())
    throw std::logic_error("Alexander polynomial came out non-integral");
  return delta;
}

HalfLaurent family_alexander(int s) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  Integer a = Integer(s) * (s + 1);
  return HalfLaurent::monomial(a, 4) - HalfLaurent::monomial(2 * a + 1, 2) +
         HalfLaurent::constant(a);
}

FiberedVerdict fibered_obstruction(const HalfLaurent& delta) {
  if (delta.is_zero()) throw std::domain_error("fibered obstruction of the zero polynomial");
  const Integer& lead = delta.leading_coefficient();
  return (lead == 1 || lead == -1) ? FiberedVerdict::Inconclusive : FiberedVerdict::NotFibered;
}

}  // namespace knot
