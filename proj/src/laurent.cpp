#include "knot/laurent.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace knot {

HalfLaurent HalfLaurent::constant(Integer c) { return monomial(std::move(c), 0); }

HalfLaurent HalfLaurent::monomial(Integer c, int num) {
  HalfLaurent p;
  p.insert_term(num, std::move(c));
  return p;
}

void HalfLaurent::insert_term(int num, Integer c) {
  if (c == 0) return;
  auto it = terms_.find(num);
  if (it == terms_.end()) {
    terms_.emplace(num, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool HalfLaurent::is_integral() const {
  for (const auto& [num, c] : terms_)
    if (num % 2 != 0) return false;
  return true;
}

int HalfLaurent::min_exponent_num() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int HalfLaurent::max_exponent_num() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

const Integer& HalfLaurent::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

Integer HalfLaurent::coefficient(int num) const {
  auto it = terms_.find(num);
  return it == terms_.end() ? Integer(0) : it->second;
}

HalfLaurent HalfLaurent::mirrored() const {
  HalfLaurent r;
  for (const auto& [num, c] : terms_) r.terms_.emplace(-num, c);
  return r;
}

HalfLaurent HalfLaurent::shifted(int num) const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + num, c);
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& rhs) {
  for (const auto& [num, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(num, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& rhs) {
  for (const auto& [num, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(num, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      auto [it, inserted] = r.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

HalfLaurent operator*(const HalfLaurent& a, const Integer& c) {
  HalfLaurent r;
  if (c == 0) return r;
  for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, ca * c);
  return r;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {

// Renders the exponent of one term: e is the doubled numerator.
void append_power(std::ostream& os, int e) {
  if (e == 2) {
    os << "t";
  } else if (e % 2 == 0) {
    os << "t^" << (e / 2);
  } else {
    os << "t^(" << e << "/2)";
  }
}

}  // namespace

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << boost::multiprecision::abs(c);
    if (e != 0) {
      os << "*";
      append_power(os, e);
    }
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                ": " + what);
  }

  Integer integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return Integer(std::string(text.substr(start, pos - start)));
  }

  // t-power suffix; returns the doubled exponent numerator.
  int power() {
    if (!accept('t')) fail("expected t");
    if (!accept('^')) return 2;
    if (accept('(')) {
      Integer p = integer();
      int num;
      if (accept('/')) {
        Integer den = integer();
        if (den != 2) fail("only halves are supported");
        num = static_cast<int>(p);
      } else {
        num = 2 * static_cast<int>(p);
      }
      if (!accept(')')) fail("expected )");
      return num;
    }
    return 2 * static_cast<int>(integer());
  }

  HalfLaurent parse() {
    HalfLaurent result;
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected + or - between terms");
      }
      first = false;
      skip_ws();
      Integer coeff = 1;
      bool have_coeff = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = integer();
        have_coeff = true;
      }
      int e = 0;
      accept('*');
      if (peek() == 't') {
        e = power();
      } else if (!have_coeff) {
        fail("expected coefficient or t");
      }
      result += HalfLaurent::monomial(sign * coeff, e);
    }
    if (first) throw std::invalid_argument("empty polynomial text");
    return result;
  }
};

}  // namespace

HalfLaurent HalfLaurent::parse(std::string_view text) {
  Parser p{text};
  return p.parse();
}

std::optional<UnitFactor> equals_up_to_unit(const HalfLaurent& p, const HalfLaurent& q) {
  if (p.is_zero() && q.is_zero()) return UnitFactor{1, 0};
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  int shift = p.max_exponent_num() - q.max_exponent_num();
  const Integer& lp = p.leading_coefficient();
  const Integer& lq = q.leading_coefficient();
  int sign;
  if (lp == lq) {
    sign = 1;
  } else if (lp == -lq) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  auto pi = p.terms().begin();
  auto qi = q.terms().begin();
  for (; pi != p.terms().end(); ++pi, ++qi) {
    if (pi->first != qi->first + shift) return std::nullopt;
    if (pi->second != (sign > 0 ? qi->second : -qi->second)) return std::nullopt;
  }
  return UnitFactor{sign, shift};
}

Integer eval_at_one(const HalfLaurent& p) {
  Integer acc = 0;
  for (const auto& [e, c] : p.terms()) acc += c;
  return acc;
}

Integer eval_at_minus_one(const HalfLaurent& p) {
  if (!p.is_integral()) throw std::domain_error("t = -1 needs an integral polynomial");
  Integer acc = 0;
  for (const auto& [e, c] : p.terms()) acc += (e / 2) % 2 == 0 ? c : -c;
  return acc;
}

namespace {

Integer mod_floor(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

// extended gcd: returns g and x with a*x = g (mod n), for computing inverses
Integer mod_inverse(const Integer& a, const Integer& n) {
  Integer old_r = mod_floor(a, n), r = n;
  Integer old_x = 1, x = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
  }
  if (old_r != 1) throw std::domain_error("unit is not invertible modulo n");
  return mod_floor(old_x, n);
}

}  // namespace

Integer eval_mod(const HalfLaurent& p, const Integer& modulus, const Integer& unit) {
  if (modulus < 1) throw std::domain_error("modulus must be positive");
  if (!p.is_integral()) throw std::domain_error("residue evaluation needs an integral polynomial");
  if (boost::multiprecision::gcd(mod_floor(unit, modulus), modulus) != 1)
    throw std::domain_error("evaluation point must be a unit modulo n");
  Integer c = mod_floor(unit, modulus);
  Integer cinv = mod_inverse(c, modulus);
  Integer acc = 0;
  for (const auto& [e, coeff] : p.terms()) {
    long long k = e / 2;
    Integer base = k >= 0 ? c : cinv;
    Integer power = 1;
    for (long long j = 0; j < (k >= 0 ? k : -k); ++j) power = mod_floor(power * base, modulus);
    acc = mod_floor(acc + coeff * power, modulus);
  }
  return acc;
}

HalfLaurent LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return HalfLaurent::constant(1);
  if (n == 1) return at(0, 0);
  // expand along the first row
  HalfLaurent det;
  for (int c = 0; c < n; ++c) {
    if (at(0, c).is_zero()) continue;
    LaurentMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = at(r, k);
      }
    }
    HalfLaurent term = at(0, c) * minor.determinant();
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace knot
