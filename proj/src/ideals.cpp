#include "knot/ideals.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace knot {

namespace {

Integer mod_floor(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

// Divides out the t-power so the constant term is nonzero; a unit move.
HalfLaurent clear_valuation(const HalfLaurent& f) {
  if (f.is_zero()) return f;
  return f.shifted(-f.min_exponent_num());
}

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
  if (old_r != 1) throw std::domain_error("not invertible");
  return mod_floor(old_x, n);
}

// f as a*t + b, if it has degree <= 1 after clearing its valuation.
std::optional<std::pair<Integer, Integer>> as_linear(const HalfLaurent& f) {
  HalfLaurent g = clear_valuation(f);
  if (g.max_exponent_num() > 2 || !g.is_integral()) return std::nullopt;
  return std::make_pair(g.coefficient(2), g.coefficient(0));
}

}  // namespace

IdealGens::IdealGens(std::vector<HalfLaurent> gens) {
  for (auto& g : gens)
    if (!g.is_zero()) generators.push_back(std::move(g));
}

IdealGens elementary_ideal(const LaurentMatrix& M, int k) {
  if (M.rows() != M.cols()) throw std::invalid_argument("elementary ideal of non-square matrix");
  if (k < 1) throw std::invalid_argument("ideal index must be >= 1");
  int n = M.rows();
  int m = n - k + 1;  // minor size
  if (m <= 0) return IdealGens({HalfLaurent::constant(1)});

  // all m-subsets of rows and columns
  std::vector<int> idx(m);
  std::vector<std::vector<int>> subsets;
  auto gen = [&](auto&& self, int pos, int start) -> void {
    if (pos == m) {
      subsets.push_back(idx);
      return;
    }
    for (int v = start; v < n; ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  gen(gen, 0, 0);

  std::vector<HalfLaurent> minors;
  for (const auto& rows : subsets)
    for (const auto& cols : subsets) {
      LaurentMatrix sub(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sub.at(r, c) = M.at(rows[r], cols[c]);
      minors.push_back(sub.determinant());
    }
  return IdealGens(std::move(minors));
}

std::optional<LinearQuotient> linear_quotient_of(const HalfLaurent& g1, const HalfLaurent& g2) {
  if (g1.is_zero() || g2.is_zero()) return std::nullopt;
  auto l1 = as_linear(g1), l2 = as_linear(g2);
  if (!l1 || !l2) return std::nullopt;

  // Integer row reduction of [[a1,b1],[a2,b2]]: the rows span the same ideal
  // throughout, since every step is a Z-combination of the generators.
  auto [a1, b1] = *l1;
  auto [a2, b2] = *l2;
  while (a2 != 0) {
    Integer q = a1 / a2;
    Integer ra = a1 - q * a2, rb = b1 - q * b2;
    a1 = a2;
    b1 = b2;
    a2 = ra;
    b2 = rb;
  }
  // now the pair is {a1*t + b1, b2}
  Integer n = boost::multiprecision::abs(b2);
  if (n == 0 || a1 == 0) return std::nullopt;

  Integer a = mod_floor(a1, n);
  if (boost::multiprecision::gcd(a, n) != 1) return std::nullopt;
  // u*a1 = 1 (mod n), so u*(a1 t + b1) = t + u b1 modulo (n, multiples of n*t)
  Integer u = mod_inverse(a, n);
  Integer c = mod_floor(-u * b1, n);
  if (boost::multiprecision::gcd(c, n) != 1) return std::nullopt;

  LinearQuotient quotient{n, c};
  if (quotient.image(g1) != 0 || quotient.image(g2) != 0)
    throw std::logic_error("quotient reduction lost a generator");
  return quotient;
}

std::optional<LinearQuotient> linear_quotient_of(const IdealGens& I) {
  const auto& gens = I.generators;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      auto q = linear_quotient_of(gens[i], gens[j]);
      if (!q) continue;
      bool all_vanish = true;
      for (const auto& g : gens)
        if (q->image(g) != 0) {
          all_vanish = false;
          break;
        }
      if (all_vanish) return q;
    }
  return std::nullopt;
}

namespace {

// Existence of an integer solution x of A x = b, via column Hermite
// reduction. Returns the solution when there is one.
std::optional<std::vector<Integer>> solve_integer_linear(std::vector<std::vector<Integer>> A,
                                                         std::vector<Integer> b) {
  size_t rows = A.size();
  size_t cols = rows == 0 ? 0 : A[0].size();
  // transform T starts as the identity; column ops keep A_orig * T = A
  std::vector<std::vector<Integer>> T(cols, std::vector<Integer>(cols, 0));
  for (size_t i = 0; i < cols; ++i) T[i][i] = 1;

  auto col_axpy = [&](size_t dst, size_t src, const Integer& q) {
    for (size_t r = 0; r < rows; ++r) A[r][dst] -= q * A[r][src];
    for (size_t r = 0; r < cols; ++r) T[r][dst] -= q * T[r][src];
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(A[r][i], A[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(T[r][i], T[r][j]);
  };

  size_t rank = 0;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t r = 0; r < rows && rank < cols; ++r) {
    // Euclid across columns >= rank until one nonzero entry remains in row r
    while (true) {
      size_t best = cols;
      for (size_t c = rank; c < cols; ++c)
        if (A[r][c] != 0 &&
            (best == cols ||
             boost::multiprecision::abs(A[r][c]) < boost::multiprecision::abs(A[r][best])))
          best = c;
      if (best == cols) break;  // row is zero beyond rank
      for (size_t c = rank; c < cols; ++c) {
        if (c == best || A[r][c] == 0) continue;
        Integer q = A[r][c] / A[r][best];
        col_axpy(c, best, q);
      }
      bool done = true;
      for (size_t c = rank; c < cols; ++c)
        if (c != best && A[r][c] != 0) done = false;
      if (done) {
        col_swap(rank, best);
        pivots.emplace_back(r, rank);
        ++rank;
        break;
      }
    }
  }

  // forward substitution over the echelon columns
  std::vector<Integer> y(cols, 0);
  size_t next_pivot = 0;
  for (size_t r = 0; r < rows; ++r) {
    Integer val = b[r];
    for (size_t c = 0; c < rank; ++c) val -= A[r][c] * y[c];
    if (next_pivot < pivots.size() && pivots[next_pivot].first == r) {
      size_t c = pivots[next_pivot].second;
      if (val % A[r][c] != 0) return std::nullopt;
      y[c] = val / A[r][c];
      ++next_pivot;
    } else if (val != 0) {
      return std::nullopt;
    }
  }

  std::vector<Integer> x(cols, 0);
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < cols; ++j) x[i] += T[i][j] * y[j];
  return x;
}

}  // namespace

Decision contains_by_search(const IdealGens& I, const HalfLaurent& f, const SearchBounds& bounds) {
  if (f.is_zero()) return Decision::Yes;
  if (I.generators.empty()) return Decision::Undecided;

  std::vector<HalfLaurent> gens;
  for (const auto& g : I.generators) {
    if (!g.is_integral()) throw std::domain_error("ideal generators must be integral");
    gens.push_back(clear_valuation(g));
  }
  if (!f.is_integral()) throw std::domain_error("membership inputs must be integral");
  HalfLaurent fr = clear_valuation(f);

  int fdeg = fr.max_exponent_num() / 2;
  int gdeg = 0;
  for (const auto& g : gens) gdeg = std::max(gdeg, g.max_exponent_num() / 2);

  for (int shift = 0; shift <= bounds.max_shift; ++shift) {
    int adeg = bounds.max_coeff_degree;
    int maxdeg = std::max(fdeg + shift, gdeg + adeg);
    size_t rows = static_cast<size_t>(maxdeg) + 1;
    size_t cols = gens.size() * (adeg + 1);
    // unknowns: coefficient k of a_j at column j*(adeg+1)+k
    std::vector<std::vector<Integer>> A(rows, std::vector<Integer>(cols, 0));
    for (size_t j = 0; j < gens.size(); ++j)
      for (const auto& [e, c] : gens[j].terms())
        for (int k = 0; k <= adeg; ++k) {
          int row = e / 2 + k;
          A[row][j * (adeg + 1) + k] = c;
        }
    std::vector<Integer> b(rows, 0);
    for (const auto& [e, c] : fr.terms()) b[e / 2 + shift] = c;

    auto x = solve_integer_linear(A, b);
    if (!x) continue;

    // re-verify the combination in the ring
    HalfLaurent sum;
    for (size_t j = 0; j < gens.size(); ++j) {
      HalfLaurent aj;
      for (int k = 0; k <= adeg; ++k) aj += HalfLaurent::monomial((*x)[j * (adeg + 1) + k], 2 * k);
      sum += aj * gens[j];
    }
    if (sum != fr.shifted(2 * shift))
      throw std::logic_error("combination certificate failed verification");
    return Decision::Yes;
  }
  return Decision::Undecided;
}

Decision contains(const IdealGens& I, const HalfLaurent& f, const SearchBounds& bounds) {
  if (f.is_zero()) return Decision::Yes;
  if (I.generators.empty()) return Decision::No;
  if (!f.is_integral()) throw std::domain_error("membership inputs must be integral");

  if (auto q = linear_quotient_of(I)) return q->image(f) == 0 ? Decision::Yes : Decision::No;
  return contains_by_search(I, f, bounds);
}

Decision ideal_equal(const IdealGens& I, const IdealGens& J, const SearchBounds& bounds) {
  bool undecided = false;
  for (const auto& g : J.generators) {
    Decision d = contains(I, g, bounds);
    if (d == Decision::No) return Decision::No;
    if (d == Decision::Undecided) undecided = true;
  }
  for (const auto& g : I.generators) {
    Decision d = contains(J, g, bounds);
    if (d == Decision::No) return Decision::No;
    if (d == Decision::Undecided) undecided = true;
  }
  return undecided ? Decision::Undecided : Decision::Yes;
}

long long subfamily_index(int s, int k) {
  if (s < 1 || k < 1) throw std::invalid_argument("subfamily index needs s, k >= 1");
  return (2LL * k - 1) * s + k - 1;
}

}  // namespace knot
