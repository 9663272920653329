#include "knot/bracket.hpp"

#include <sstream>

namespace knot {

BracketPoly BracketPoly::monomial(Integer c, int exponent) {
  BracketPoly p;
  if (c != 0) p.terms_.emplace(exponent, std::move(c));
  return p;
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BracketPoly operator*(const BracketPoly& a, const BracketPoly& b) {
  BracketPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

std::string BracketPoly::str() const {
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
    if (e != 0) os << "*A^" << e;
  }
  return os.str();
}

BracketPoly assemble_bracket(const StateCounts& counts) {
  BracketPoly delta;
  delta += BracketPoly::monomial(-1, 2);
  delta += BracketPoly::monomial(-1, -2);

  // delta^(L-1) for every loop count that occurs
  std::vector<BracketPoly> delta_pow(counts.max_loops + 1);
  delta_pow[0] = BracketPoly::monomial(1, 0);
  for (int m = 1; m <= counts.max_loops; ++m) delta_pow[m] = delta_pow[m - 1] * delta;

  BracketPoly sum;
  for (int a = 0; a <= counts.crossings; ++a)
    for (int loops = 1; loops <= counts.max_loops; ++loops) {
      std::uint64_t n = counts.at(a, loops);
      if (n == 0) continue;
      int exponent = 2 * a - counts.crossings;
      sum += BracketPoly::monomial(Integer(n), exponent) * delta_pow[loops - 1];
    }
  return sum;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

BracketPoly kauffman_bracket_serial(const OrientedDiagram& d, int max_crossings) {
  const int c = d.crossing_count();
  if (c > max_crossings) throw BudgetExceeded("crossing count exceeds the state-sum budget");

  StateCounts counts;
  counts.crossings = c;
  counts.max_loops = d.arc_count() + d.free_loop_count();
  counts.buckets.assign(static_cast<size_t>(c + 1) * (counts.max_loops + 1), 0);

  const auto& xs = d.crossings();
  const int arcs = d.arc_count();
  std::vector<int> parent(arcs);

  const std::uint64_t nstates = std::uint64_t(1) << c;
  for (std::uint64_t state = 0; state < nstates; ++state) {
    for (int i = 0; i < arcs; ++i) parent[i] = i;
    int merges = 0;  // each union that joins two classes removes one loop
    for (int j = 0; j < c; ++j) {
      const auto& x = xs[j];
      bool b_smoothing = (state >> j) & 1;
      // A joins slots (0,1) and (2,3); B joins (0,3) and (1,2)
      int p1 = b_smoothing ? 3 : 1;
      int p2 = b_smoothing ? 1 : 3;
      int r1 = find_root(parent, x.arc[0]), r2 = find_root(parent, x.arc[p1]);
      if (r1 != r2) {
        parent[r1] = r2;
        ++merges;
      }
      r1 = find_root(parent, x.arc[2]);
      r2 = find_root(parent, x.arc[p2]);
      if (r1 != r2) {
        parent[r1] = r2;
        ++merges;
      }
    }
    int loops = arcs - merges + d.free_loop_count();
    int a_count = c - static_cast<int>(__builtin_popcountll(state));
    ++counts.at(a_count, loops);
  }
  return assemble_bracket(counts);
}

HalfLaurent bracket_to_jones(const BracketPoly& bracket, int writhe) {
  HalfLaurent jones;
  int sign = writhe % 2 == 0 ? 1 : -1;
  for (const auto& [e, c] : bracket.terms()) {
    int ea = e - 3 * writhe;  // multiply by A^(-3w)
    if (ea % 2 != 0) throw std::logic_error("bracket normalization left an odd A-exponent");
    jones += HalfLaurent::monomial(sign > 0 ? c : -c, -ea / 2);
  }
  return jones;
}

HalfLaurent jones_from_bracket_serial(const OrientedDiagram& d, int max_crossings) {
  return bracket_to_jones(kauffman_bracket_serial(d, max_crossings), d.writhe());
}

HalfLaurent jones_from_bracket(const OrientedDiagram& d, int max_crossings) {
  return bracket_to_jones(kauffman_bracket(d, max_crossings), d.writhe());
}

}  // namespace knot
