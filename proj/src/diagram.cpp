#include "knot/diagram.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knot {

TorusSpec::TorusSpec(int half_twists_) : half_twists(half_twists_) {
  if (half_twists < 2 || half_twists % 2 != 0)
    throw std::invalid_argument("torus spec needs an even half-twist count >= 2");
}

std::string TorusSpec::str() const {
  std::ostringstream os;
  os << "T(2," << half_twists << ")";
  return os.str();
}

namespace {

// Geometric ports of a crossing, counterclockwise. Strands pass through
// diagonally: port p connects to port p^2.
constexpr int SW = 0, SE = 1, NE = 2, NW = 3;

// Crossing handedness of a tassel with positive entries. Frozen by
// calibration: this choice reproduces the pretzel Jones golden values
// downstream (the other choice builds the mirror image).
constexpr int kPositiveTasselUnderDiag = 1;  // under-strand on the SE-NW diagonal

struct BuildCrossing {
  std::array<ArcId, 4> port_arc{-1, -1, -1, -1};
  int under_diag = 0;  // under-strand ports are {under_diag, under_diag+2}
};

struct Endpoint {
  int crossing;
  int port;
};

struct Builder {
  std::vector<BuildCrossing> crossings;
  int arc_count = 0;
  int free_loops = 0;
  // orientation seeds: walk begins flowing along arc into the given endpoint
  std::vector<std::pair<ArcId, Endpoint>> seeds;

  int new_arc(Endpoint a, Endpoint b) {
    int id = arc_count++;
    attach(id, a);
    attach(id, b);
    return id;
  }

  void attach(ArcId id, Endpoint e) {
    if (crossings[e.crossing].port_arc[e.port] != -1)
      throw std::logic_error("diagram builder: port already occupied");
    crossings[e.crossing].port_arc[e.port] = id;
  }

  OrientedDiagram finalize(std::string source) const;
};

OrientedDiagram Builder::finalize(std::string source) const {
  const int nc = static_cast<int>(crossings.size());

  // arc -> its two endpoints
  std::vector<std::vector<Endpoint>> ends(arc_count);
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) {
      ArcId a = crossings[c].port_arc[p];
      if (a < 0 || a >= arc_count) throw std::logic_error("diagram builder: unattached port");
      ends[a].push_back({c, p});
    }
  for (const auto& e : ends)
    if (e.size() != 2) throw std::logic_error("diagram builder: arc degree != 2");

  // walk every strand, recording where it enters each crossing
  std::vector<std::array<bool, 4>> incoming(nc, {false, false, false, false});
  std::vector<bool> seen(arc_count, false);
  int components = free_loops;

  auto walk = [&](ArcId start, Endpoint head) {
    ArcId a = start;
    Endpoint h = head;
    while (!seen[a]) {
      seen[a] = true;
      incoming[h.crossing][h.port] = true;
      int out = h.port ^ 2;
      ArcId next = crossings[h.crossing].port_arc[out];
      const auto& ne = ends[next];
      // head of the next arc is its endpoint other than the one we left from
      if (ne[0].crossing == h.crossing && ne[0].port == out)
        h = ne[1];
      else
        h = ne[0];
      a = next;
    }
    ++components;
  };

  for (const auto& [arc, head] : seeds)
    if (!seen[arc]) walk(arc, head);
  for (ArcId a = 0; a < arc_count; ++a)
    if (!seen[a]) walk(a, ends[a][0]);

  // rotate ports into PD slot order and read off signs
  std::vector<Crossing> out;
  out.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& bc = crossings[c];
    int u0 = bc.under_diag, u1 = bc.under_diag + 2;
    if (incoming[c][u0] == incoming[c][u1])
      throw std::logic_error("diagram builder: bad under-strand orientation");
    int in_under = incoming[c][u0] ? u0 : u1;
    Crossing x;
    for (int s = 0; s < 4; ++s) x.arc[s] = bc.port_arc[(in_under + s) % 4];
    bool over_in_3 = incoming[c][(in_under + 3) % 4];
    bool over_in_1 = incoming[c][(in_under + 1) % 4];
    if (over_in_1 == over_in_3)
      throw std::logic_error("diagram builder: bad over-strand orientation");
    x.sign = over_in_3 ? 1 : -1;
    out.push_back(x);
  }
  return OrientedDiagram(std::move(out), arc_count, free_loops, components, std::move(source));
}

}  // namespace

OrientedDiagram::OrientedDiagram(std::vector<Crossing> crossings, int arc_count, int free_loops,
                                 int components, std::string source)
    : crossings_(std::move(crossings)),
      arc_count_(arc_count),
      free_loops_(free_loops),
      components_(components),
      source_(std::move(source)) {
  if (crossings_.empty() && free_loops_ == 0)
    throw std::invalid_argument("empty diagram");
  if (components_ < 1) throw std::invalid_argument("diagram needs at least one component");
  std::vector<int> degree(arc_count_, 0);
  for (const auto& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
    for (ArcId a : x.arc) {
      if (a < 0 || a >= arc_count_) throw std::invalid_argument("arc id out of range");
      ++degree[a];
    }
  }
  for (int d : degree)
    if (d != 2) throw std::invalid_argument("every arc must occur exactly twice");
}

int OrientedDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

std::string OrientedDiagram::pd_text() const {
  std::ostringstream os;
  for (const auto& x : crossings_)
    os << "X(" << x.arc[0] << "," << x.arc[1] << "," << x.arc[2] << "," << x.arc[3] << ")"
       << (x.sign > 0 ? '+' : '-') << "\n";
  return os.str();
}

OrientedDiagram pretzel_diagram(const PretzelSpec& spec) {
  const long long tassels[3] = {spec.p, spec.q, spec.r};
  Builder b;
  int offset[3];
  for (int t = 0; t < 3; ++t) {
    offset[t] = static_cast<int>(b.crossings.size());
    int n = static_cast<int>(std::llabs(tassels[t]));
    for (int k = 0; k < n; ++k) {
      BuildCrossing c;
      c.under_diag = tassels[t] > 0 ? kPositiveTasselUnderDiag : 1 - kPositiveTasselUnderDiag;
      b.crossings.push_back(c);
    }
  }
  auto top = [&](int t) { return offset[t]; };
  auto bottom = [&](int t) {
    return offset[t] + static_cast<int>(std::llabs(tassels[t])) - 1;
  };

  // arcs between stacked crossings of each tassel
  for (int t = 0; t < 3; ++t)
    for (int c = top(t); c < bottom(t); ++c) {
      b.new_arc({c, SW}, {c + 1, NW});
      b.new_arc({c, SE}, {c + 1, NE});
    }
  // connectors along the top and bottom, then the outer closure arcs:
  // the numerator closure, joining the outer top corners and the outer
  // bottom corners (the side closure would split the tassels into a
  // connected sum instead)
  b.new_arc({top(0), NE}, {top(1), NW});
  b.new_arc({top(1), NE}, {top(2), NW});
  b.new_arc({bottom(0), SE}, {bottom(1), SW});
  b.new_arc({bottom(1), SE}, {bottom(2), SW});
  int top_closure = b.new_arc({top(0), NW}, {top(2), NE});
  b.new_arc({bottom(0), SW}, {bottom(2), SE});

  b.seeds.push_back({top_closure, {top(0), NW}});
  return b.finalize(spec.str());
}

OrientedDiagram torus2_diagram(const TorusSpec& spec) {
  int n = spec.half_twists;
  Builder b;
  b.crossings.resize(n);
  for (auto& c : b.crossings) c.under_diag = 1;

  for (int c = 0; c + 1 < n; ++c) {
    b.new_arc({c, SW}, {c + 1, NW});
    b.new_arc({c, SE}, {c + 1, NE});
  }
  int left_closure = b.new_arc({0, NW}, {n - 1, SW});
  int right_closure = b.new_arc({0, NE}, {n - 1, SE});

  // antiparallel orientation: the left strand runs down the twist region
  // and the right strand runs up, which is the orientation whose smoothing
  // chain ends in the unknot; every crossing then has sign -1
  b.seeds.push_back({left_closure, {0, NW}});
  b.seeds.push_back({right_closure, {n - 1, SE}});
  return b.finalize(spec.str());
}

OrientedDiagram unknot_diagram() { return OrientedDiagram({}, 0, 1, 1, "unknot"); }

namespace {

bool slot_is_incoming(const Crossing& x, int slot) {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return x.sign < 0;
    default: return x.sign > 0;
  }
}

}  // namespace

OrientedDiagram add_kink(const OrientedDiagram& d, int sign, ArcId on_arc) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +-1");

  auto curl = [&](ArcId in_arc, ArcId out_arc, ArcId loop_arc) {
    // strand passes NW->SE, the little loop returns SE->NE, then NE->SW
    return sign > 0 ? Crossing{{in_arc, out_arc, loop_arc, loop_arc}, 1}
                    : Crossing{{loop_arc, in_arc, out_arc, loop_arc}, -1};
  };

  if (d.crossing_count() == 0) {
    // curl the free loop itself: two arcs, one crossing
    std::vector<Crossing> xs{curl(0, 0, 1)};
    return OrientedDiagram(std::move(xs), 2, d.free_loop_count() - 1, d.component_count(),
                           d.source());
  }

  if (on_arc < 0 || on_arc >= d.arc_count()) throw std::invalid_argument("no such arc");
  std::vector<Crossing> xs = d.crossings();
  ArcId loop_arc = d.arc_count();
  ArcId tail_arc = d.arc_count() + 1;
  // re-route the head occurrence of on_arc through the new crossing
  bool rerouted = false;
  for (auto& x : xs) {
    for (int s = 0; s < 4 && !rerouted; ++s)
      if (x.arc[s] == on_arc && slot_is_incoming(x, s)) {
        x.arc[s] = tail_arc;
        rerouted = true;
      }
    if (rerouted) break;
  }
  if (!rerouted) throw std::logic_error("arc has no incoming occurrence");
  xs.push_back(curl(on_arc, tail_arc, loop_arc));
  return OrientedDiagram(std::move(xs), d.arc_count() + 2, d.free_loop_count(),
                         d.component_count(), d.source());
}

}  // namespace knot
