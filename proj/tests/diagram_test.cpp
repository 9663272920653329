#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knot/diagram.hpp"

#include <map>
#include <random>
#include <sstream>

using namespace knot;

namespace {

void check_arc_degrees(const OrientedDiagram& d) {
  std::map<ArcId, int> degree;
  for (const auto& x : d.crossings())
    for (ArcId a : x.arc) ++degree[a];
  CHECK(static_cast<int>(degree.size()) == d.arc_count());
  for (const auto& [arc, deg] : degree) {
    CHECK(arc >= 0);
    CHECK(arc < d.arc_count());
    CHECK(deg == 2);
  }
}

}  // namespace

TEST_CASE("torus spec validation") {
  CHECK_THROWS_AS(TorusSpec(3), std::invalid_argument);
  CHECK_THROWS_AS(TorusSpec(0), std::invalid_argument);
  CHECK(TorusSpec(6).k() == 3);
  CHECK(TorusSpec(4).str() == "T(2,4)");
}

TEST_CASE("pretzel diagrams") {
  OrientedDiagram d = pretzel_diagram(PretzelSpec(-3, 3, 3));
  CHECK(d.crossing_count() == 9);
  CHECK(d.arc_count() == 18);
  CHECK(d.component_count() == 1);
  check_arc_degrees(d);

  OrientedDiagram d7 = pretzel_diagram(PretzelSpec(-3, 3, 7));
  CHECK(d7.crossing_count() == 13);
  CHECK(d7.component_count() == 1);
  check_arc_degrees(d7);

  for (long long p : {-5, -3, 3})
    for (long long q : {-1, 1, 5})
      for (long long r : {-7, 3, 9}) {
        OrientedDiagram g = pretzel_diagram(PretzelSpec(p, q, r));
        CHECK(g.crossing_count() == std::llabs(p) + std::llabs(q) + std::llabs(r));
        CHECK(g.component_count() == 1);
        check_arc_degrees(g);
      }
}

TEST_CASE("torus diagrams") {
  OrientedDiagram hopf = torus2_diagram(TorusSpec(2));
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.writhe() == -2);

  for (int k = 1; k <= 8; ++k) {
    OrientedDiagram d = torus2_diagram(TorusSpec(2 * k));
    CHECK(d.crossing_count() == 2 * k);
    CHECK(d.component_count() == 2);
    CHECK(d.writhe() == -2 * k);
    check_arc_degrees(d);
  }
}

TEST_CASE("writhe under kinks") {
  OrientedDiagram base = pretzel_diagram(PretzelSpec(-3, 3, 7));
  OrientedDiagram plus = add_kink(base, +1);
  CHECK(plus.crossing_count() == base.crossing_count() + 1);
  CHECK(plus.writhe() == base.writhe() + 1);
  check_arc_degrees(plus);

  OrientedDiagram both = add_kink(plus, -1);
  CHECK(both.writhe() == base.writhe());
  CHECK(both.component_count() == 1);
  check_arc_degrees(both);

  std::mt19937 rng(97);
  OrientedDiagram d = torus2_diagram(TorusSpec(4));
  int w = d.writhe();
  for (int step = 0; step < 10; ++step) {
    int sign = rng() % 2 == 0 ? 1 : -1;
    ArcId arc = static_cast<ArcId>(rng() % d.arc_count());
    d = add_kink(d, sign, arc);
    w += sign;
    CHECK(d.writhe() == w);
    CHECK(d.component_count() == 2);
    check_arc_degrees(d);
  }
}

TEST_CASE("kink on the bare unknot") {
  OrientedDiagram u = unknot_diagram();
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.free_loop_count() == 1);
  CHECK(u.writhe() == 0);

  OrientedDiagram curled = add_kink(u, +1);
  CHECK(curled.crossing_count() == 1);
  CHECK(curled.component_count() == 1);
  CHECK(curled.free_loop_count() == 0);
  CHECK(curled.writhe() == 1);
  check_arc_degrees(curled);

  CHECK(add_kink(u, -1).writhe() == -1);
}

TEST_CASE("pd text") {
  OrientedDiagram hopf = torus2_diagram(TorusSpec(2));
  std::istringstream lines(hopf.pd_text());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CAPTURE(line);
    CHECK(line.rfind("X(", 0) == 0);
    CHECK(line.back() == '-');
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("diagram validation rejects bad input") {
  CHECK_THROWS_AS(OrientedDiagram({}, 0, 0, 1, "empty"), std::invalid_argument);
  std::vector<Crossing> bad{{{0, 0, 1, 2}, 1}};
  CHECK_THROWS_AS(OrientedDiagram(std::move(bad), 3, 0, 1, "bad degree"),
                  std::invalid_argument);
  std::vector<Crossing> badsign{{{0, 0, 1, 1}, 2}};
  CHECK_THROWS_AS(OrientedDiagram(std::move(badsign), 2, 0, 1, "bad sign"),
                  std::invalid_argument);
}
