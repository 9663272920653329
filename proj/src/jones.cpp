#include "knot/jones.hpp"

#include <stdexcept>

namespace knot {

JonesValue torus_jones(int k) {
  if (k < 1) throw std::invalid_argument("torus parameter k must be >= 1");
  HalfLaurent inner = HalfLaurent::t_power(-4 * k) + HalfLaurent::t_power(-4 * k + 4);
  for (int i = 0; i <= 2 * k - 3; ++i)
    inner += HalfLaurent::monomial(i % 2 == 0 ? 1 : -1, -2 * i);
  return {(-inner).shifted(-1), JonesMethod::ClosedForm};
}

bool torus_jones_recurrence_check(int k) {
  if (k < 1) throw std::invalid_argument("torus parameter k must be >= 1");
  HalfLaurent vk = torus_jones(k).polynomial;
  HalfLaurent vk1 = torus_jones(k + 1).polynomial;
  HalfLaurent lhs = vk.shifted(-2) - vk1.shifted(2) + HalfLaurent::t_power(-1) -
                    HalfLaurent::t_power(1);
  return lhs.is_zero();
}

JonesValue torus_jones_by_skein(int k) {
  if (k < 1) throw std::invalid_argument("torus parameter k must be >= 1");
  // Hopf base, then V_{j+1} = t^-2 V_j + t^(-3/2) - t^(-1/2)
  HalfLaurent v = HalfLaurent::monomial(-1, -5) + HalfLaurent::monomial(-1, -1);
  for (int j = 1; j < k; ++j)
    v = v.shifted(-4) + HalfLaurent::t_power(-3) - HalfLaurent::t_power(-1);
  return {v, JonesMethod::SkeinRecurrence};
}

JonesValue pretzel_jones_s1(long long i) {
  if (i < 3) throw std::invalid_argument("closed form needs i >= 3");
  int e = static_cast<int>(-2 * i);
  HalfLaurent v = HalfLaurent::constant(1);
  v += HalfLaurent::t_power(2 * (e - 4));
  v += HalfLaurent::monomial(-1, 2 * (e - 3));
  v += HalfLaurent::t_power(2 * (e - 2));
  v += HalfLaurent::monomial(-2, 2 * (e - 1));
  v += HalfLaurent::t_power(2 * e);
  v += HalfLaurent::monomial(-1, 2 * (e + 1));
  v += HalfLaurent::t_power(2 * (e + 2));
  return {v, JonesMethod::ClosedForm};
}

namespace {

// The i-independent bracketed factor of the general closed form:
// t^(2s+1) + t^-(2s+1) - (t + t^-1) - 2s
//   + sum_{j=1}^{2s} (-1)^(j+1) (2s+1-j) (t^j + t^-j)
HalfLaurent closed_form_factor(int s) {
  HalfLaurent f = HalfLaurent::t_power(2 * (2 * s + 1)) + HalfLaurent::t_power(-2 * (2 * s + 1));
  f -= HalfLaurent::t_power(2) + HalfLaurent::t_power(-2);
  f += HalfLaurent::constant(-2 * s);
  for (int j = 1; j <= 2 * s; ++j) {
    Integer c = (j % 2 == 1 ? 1 : -1) * Integer(2 * s + 1 - j);
    f += HalfLaurent::monomial(c, 2 * j) + HalfLaurent::monomial(c, -2 * j);
  }
  return f;
}

JonesValue skein_telescoped(int s, long long i) {
  // V = 1 + sum_{u=1}^{s} t^-1 (t^(1/2) - t^(-1/2)) (V(T(2,2i+2u)) - V(T(2,2i-2u)))
  HalfLaurent v = HalfLaurent::constant(1);
  HalfLaurent skein_factor =
      (HalfLaurent::t_power(1) - HalfLaurent::t_power(-1)).shifted(-2);
  for (int u = 1; u <= s; ++u) {
    HalfLaurent grow = torus_jones(static_cast<int>(i) + u).polynomial;
    HalfLaurent shrink = torus_jones(static_cast<int>(i) - u).polynomial;
    v += skein_factor * (grow - shrink);
  }
  return {v, JonesMethod::SkeinRecurrence};
}

}  // namespace

JonesValue pretzel_jones(int s, long long i) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  if (i < s + 2) throw std::invalid_argument("closed form needs i >= s+2");
  HalfLaurent v = HalfLaurent::constant(1) +
                  closed_form_factor(s).shifted(static_cast<int>(2 * (-2 * i - 1)));
  return {v, JonesMethod::ClosedForm};
}

JonesValue pretzel_jones_skein(int s, long long i) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  if (i < s + 2) throw std::invalid_argument("skein evaluation needs i >= s+2");
  return skein_telescoped(s, i);
}

JonesValue pretzel_jones_extended(int s, long long i) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  if (i < s + 1) throw std::invalid_argument("extended evaluation needs i >= s+1");
  return skein_telescoped(s, i);
}

bool pretzel_recurrence_check(int s, long long i) {
  if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
  if (i < s + 2) throw std::invalid_argument("recurrence check needs i >= s+2");
  HalfLaurent upper = pretzel_jones(s, i).polynomial;
  HalfLaurent lower =
      s == 1 ? HalfLaurent::constant(1) : pretzel_jones(s - 1, i).polynomial;
  HalfLaurent skein_factor =
      (HalfLaurent::t_power(1) - HalfLaurent::t_power(-1)).shifted(-2);
  HalfLaurent rhs = skein_factor * (torus_jones(static_cast<int>(i) + s).polynomial -
                                    torus_jones(static_cast<int>(i) - s).polynomial);
  return upper - lower == rhs;
}

DistinctnessReport family_distinct(int s, long long i_first, long long i_last) {
  if (i_first < s + 2) throw std::invalid_argument("range starts below the closed-form domain");
  if (i_last < i_first) throw std::invalid_argument("empty distinctness range");
  DistinctnessReport report;
  report.all_distinct = true;
  for (long long i = i_first; i <= i_last; ++i) {
    int min_e = pretzel_jones(s, i).polynomial.min_exponent_num();
    if (!report.min_exponent_nums.empty() && min_e >= report.min_exponent_nums.back())
      report.all_distinct = false;
    report.min_exponent_nums.push_back(min_e);
  }
  return report;
}

}  // namespace knot
