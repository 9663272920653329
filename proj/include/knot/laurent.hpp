// Exact Laurent polynomials in t with half-integer exponents and
// arbitrary-precision integer coefficients, plus small-matrix determinants
// over that ring. Exponents are stored as doubled integers: the key e of a
// term represents t^(e/2), so t itself is e = 2 and t^(1/2) is e = 1.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knot {

using Integer = boost::multiprecision::cpp_int;

class HalfLaurent {
public:
  HalfLaurent() = default;  // zero polynomial

  static HalfLaurent constant(Integer c);
  static HalfLaurent from_int(long long c) { return constant(Integer(c)); }
  // c * t^(num/2)
  static HalfLaurent monomial(Integer c, int num);
  // t^(num/2)
  static HalfLaurent t_power(int num) { return monomial(1, num); }

  // Parses the canonical rendering produced by str() (and minor variations:
  // optional coefficients, "t^(p)" for integer p, arbitrary whitespace).
  static HalfLaurent parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  // true when every exponent is an integer power of t
  bool is_integral() const;

  size_t term_count() const { return terms_.size(); }
  int min_exponent_num() const;  // throws std::domain_error on zero
  int max_exponent_num() const;
  const Integer& leading_coefficient() const;  // coefficient at max exponent
  Integer coefficient(int num) const;
  const std::map<int, Integer>& terms() const { return terms_; }

  // t -> 1/t
  HalfLaurent mirrored() const;
  // multiply by t^(num/2)
  HalfLaurent shifted(int num) const;

  std::string str() const;

  HalfLaurent& operator+=(const HalfLaurent& rhs);
  HalfLaurent& operator-=(const HalfLaurent& rhs);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(const HalfLaurent& a, const Integer& c);
  friend HalfLaurent operator*(const Integer& c, const HalfLaurent& a) { return a * c; }
  HalfLaurent operator-() const;

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

private:
  void insert_term(int num, Integer c);

  std::map<int, Integer> terms_;  // exponent numerator -> nonzero coefficient
};

// sign * t^(shift_num/2) with sign in {+1, -1}
struct UnitFactor {
  int sign = 1;
  int shift_num = 0;
};

// Finds the unit u = s*t^(m/2) with p = u*q, if one exists. Both zero yields
// the trivial unit; zero vs nonzero yields nullopt.
std::optional<UnitFactor> equals_up_to_unit(const HalfLaurent& p, const HalfLaurent& q);

Integer eval_at_one(const HalfLaurent& p);
// Requires an integral polynomial.
Integer eval_at_minus_one(const HalfLaurent& p);
// Evaluation t -> unit into Z/modulus; requires an integral polynomial,
// modulus >= 1 and gcd(unit, modulus) == 1. Result is in [0, modulus).
Integer eval_mod(const HalfLaurent& p, const Integer& modulus, const Integer& unit);

class LaurentMatrix {
public:
  LaurentMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  HalfLaurent& at(int r, int c) { return entries_[index(r, c)]; }
  const HalfLaurent& at(int r, int c) const { return entries_[index(r, c)]; }

  // Cofactor expansion; throws std::invalid_argument unless square.
  HalfLaurent determinant() const;

private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(r) * cols_ + c;
  }

  int rows_;
  int cols_;
  std::vector<HalfLaurent> entries_;
};

}  // namespace knot
