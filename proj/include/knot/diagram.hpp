// Oriented planar diagrams for the two generator families: pretzel links
// P(p,q,r) with odd tassels and torus links T(2,2k). Crossings are stored in
// PD form: four arc ids counterclockwise starting from the incoming
// under-strand, plus the crossing sign.
#pragma once

#include "knot/alexander.hpp"

#include <array>
#include <string>
#include <vector>

namespace knot {

// T(2, 2k), the closure of the two-strand braid with 2k crossings.
struct TorusSpec {
  int half_twists;  // 2k

  explicit TorusSpec(int half_twists_);
  int k() const { return half_twists / 2; }
  std::string str() const;
};

using ArcId = int;

struct Crossing {
  std::array<ArcId, 4> arc;  // slots 0..3, ccw from the incoming under-strand
  int sign;                  // +1 or -1
};

class OrientedDiagram {
public:
  OrientedDiagram(std::vector<Crossing> crossings, int arc_count, int free_loops,
                  int components, std::string source);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int free_loop_count() const { return free_loops_; }
  int component_count() const { return components_; }
  const std::string& source() const { return source_; }

  int writhe() const;

  // One "X(a,b,c,d)±" line per crossing.
  std::string pd_text() const;

private:
  std::vector<Crossing> crossings_;
  int arc_count_;
  int free_loops_;
  int components_;
  std::string source_;
};

OrientedDiagram pretzel_diagram(const PretzelSpec& spec);
OrientedDiagram torus2_diagram(const TorusSpec& spec);

// A crossing-free unknot.
OrientedDiagram unknot_diagram();

// Inserts one curl of the given handedness on the arc with id on_arc
// (ignored for a crossing-free diagram, where the free loop is curled).
OrientedDiagram add_kink(const OrientedDiagram& d, int sign, ArcId on_arc = 0);

inline int writhe(const OrientedDiagram& d) { return d.writhe(); }

}  // namespace knot
