#include "knot/bracket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knot {

namespace {

// Flat per-crossing arc tables: for each crossing, the two unions performed
// by an A-smoothing and by a B-smoothing.
struct SmoothingPlan {
  std::vector<std::array<int, 4>> a_pairs;  // {u1a, u1b, u2a, u2b}
  std::vector<std::array<int, 4>> b_pairs;
};

SmoothingPlan make_plan(const OrientedDiagram& d) {
  SmoothingPlan plan;
  plan.a_pairs.reserve(d.crossings().size());
  plan.b_pairs.reserve(d.crossings().size());
  for (const auto& x : d.crossings()) {
    plan.a_pairs.push_back({x.arc[0], x.arc[1], x.arc[2], x.arc[3]});
    plan.b_pairs.push_back({x.arc[0], x.arc[3], x.arc[1], x.arc[2]});
  }
  return plan;
}

inline int find_root(int* parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void accumulate_range(const SmoothingPlan& plan, int crossings, int arcs, int free_loops,
                      std::uint64_t begin, std::uint64_t end, StateCounts& counts) {
  std::vector<int> parent(arcs);
  for (std::uint64_t state = begin; state < end; ++state) {
    for (int i = 0; i < arcs; ++i) parent[i] = i;
    int merges = 0;
    for (int j = 0; j < crossings; ++j) {
      const auto& u = ((state >> j) & 1) ? plan.b_pairs[j] : plan.a_pairs[j];
      int r1 = find_root(parent.data(), u[0]);
      int r2 = find_root(parent.data(), u[1]);
      if (r1 != r2) {
        parent[r1] = r2;
        ++merges;
      }
      r1 = find_root(parent.data(), u[2]);
      r2 = find_root(parent.data(), u[3]);
      if (r1 != r2) {
        parent[r1] = r2;
        ++merges;
      }
    }
    int loops = arcs - merges + free_loops;
    int a_count = crossings - static_cast<int>(__builtin_popcountll(state));
    ++counts.at(a_count, loops);
  }
}

}  // namespace

BracketPoly kauffman_bracket(const OrientedDiagram& d, int max_crossings) {
  const int c = d.crossing_count();
  if (c > max_crossings) throw BudgetExceeded("crossing count exceeds the state-sum budget");

  SmoothingPlan plan = make_plan(d);
  const int arcs = d.arc_count();
  const int free_loops = d.free_loop_count();
  const std::uint64_t nstates = std::uint64_t(1) << c;

  StateCounts total;
  total.crossings = c;
  total.max_loops = arcs + free_loops;
  total.buckets.assign(static_cast<size_t>(c + 1) * (total.max_loops + 1), 0);

#ifdef _OPENMP
  #pragma omp parallel
  {
    StateCounts local;
    local.crossings = c;
    local.max_loops = total.max_loops;
    local.buckets.assign(total.buckets.size(), 0);
    int threads = omp_get_num_threads();
    int tid = omp_get_thread_num();
    std::uint64_t chunk = (nstates + threads - 1) / threads;
    std::uint64_t begin = std::min<std::uint64_t>(nstates, chunk * tid);
    std::uint64_t end = std::min<std::uint64_t>(nstates, begin + chunk);
    accumulate_range(plan, c, arcs, free_loops, begin, end, local);
    #pragma omp critical
    {
      for (size_t i = 0; i < total.buckets.size(); ++i) total.buckets[i] += local.buckets[i];
    }
  }
#else
  accumulate_range(plan, c, arcs, free_loops, 0, nstates, total);
#endif
  return assemble_bracket(total);
}

}  // namespace knot
