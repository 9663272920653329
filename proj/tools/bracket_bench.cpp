// Times the serial reference state sum against the OpenMP kernel on a
// ladder of pretzel diagrams and checks they agree bit for bit.
//
//   bracket_bench [max_crossings]
#include "knot/bracket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace knot;

namespace {

double time_ms(const std::function<BracketPoly()>& f, BracketPoly& result) {
  auto t0 = std::chrono::steady_clock::now();
  result = f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_crossings = argc > 1 ? std::atoi(argv[1]) : 23;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-12s %10s %12s %12s %8s %6s\n", "diagram", "crossings", "serial ms",
              "openmp ms", "speedup", "agree");

  std::vector<PretzelSpec> specs = {
      PretzelSpec(-3, 3, 7),  PretzelSpec(-3, 3, 11), PretzelSpec(-5, 5, 9),
      PretzelSpec(-5, 5, 11), PretzelSpec(-7, 7, 9),  PretzelSpec(-7, 7, 11),
  };

  for (const auto& spec : specs) {
    if (spec.crossing_count() > max_crossings) continue;
    OrientedDiagram d = pretzel_diagram(spec);
    BracketPoly serial_result, parallel_result;
    double serial_ms = time_ms([&] { return kauffman_bracket_serial(d, 25); }, serial_result);
    double parallel_ms = time_ms([&] { return kauffman_bracket(d, 25); }, parallel_result);
    std::printf("%-12s %10lld %12.1f %12.1f %7.2fx %6s\n", spec.str().c_str(),
                spec.crossing_count(), serial_ms, parallel_ms, serial_ms / parallel_ms,
                serial_result == parallel_result ? "yes" : "NO");
  }
  return 0;
}
