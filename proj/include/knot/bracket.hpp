// Brute-force Kauffman bracket state sum: sums A^(#A - #B) * delta^(loops-1)
// over all 2^c smoothings of a diagram, with delta = -A^2 - A^-2 and loop
// counting by union-find over arcs. Serves as the independent Jones oracle,
// normalized by (-A^3)^(-writhe) and A = t^(-1/4).
//
// Two kernels compute the same state sum: a plain serial reference and an
// OpenMP one partitioned over disjoint state ranges. Both bucket states by
// (#A, loops) with exact integer counts, so results are identical and
// deterministic under any partitioning.
#pragma once

#include "knot/diagram.hpp"
#include "knot/laurent.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace knot {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in the bracket variable A with integer exponents.
class BracketPoly {
public:
  BracketPoly() = default;
  static BracketPoly monomial(Integer c, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Integer>& terms() const { return terms_; }

  BracketPoly& operator+=(const BracketPoly& rhs);
  friend BracketPoly operator*(const BracketPoly& a, const BracketPoly& b);
  friend bool operator==(const BracketPoly& a, const BracketPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BracketPoly& a, const BracketPoly& b) { return !(a == b); }

  std::string str() const;

private:
  std::map<int, Integer> terms_;
};

// State counts bucketed by (#A-smoothings, resolved loop count); the bracket
// polynomial is assembled from these after the enumeration.
struct StateCounts {
  int crossings = 0;
  int max_loops = 0;
  std::vector<std::uint64_t> buckets;  // [(#A) * (max_loops+1) + loops]

  std::uint64_t& at(int a_count, int loops) {
    return buckets[static_cast<size_t>(a_count) * (max_loops + 1) + loops];
  }
  std::uint64_t at(int a_count, int loops) const {
    return buckets[static_cast<size_t>(a_count) * (max_loops + 1) + loops];
  }
};

BracketPoly assemble_bracket(const StateCounts& counts);

// Plain reference enumeration.
BracketPoly kauffman_bracket_serial(const OrientedDiagram& d, int max_crossings = 24);
// OpenMP enumeration over disjoint state ranges.
BracketPoly kauffman_bracket(const OrientedDiagram& d, int max_crossings = 24);

// (-A^3)^(-w) <D> at A = t^(-1/4).
HalfLaurent bracket_to_jones(const BracketPoly& bracket, int writhe);

HalfLaurent jones_from_bracket(const OrientedDiagram& d, int max_crossings = 24);
HalfLaurent jones_from_bracket_serial(const OrientedDiagram& d, int max_crossings = 24);

}  // namespace knot
