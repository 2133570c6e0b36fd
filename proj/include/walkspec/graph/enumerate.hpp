#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/graph/canonical.hpp"
#include "walkspec/graph/graph.hpp"

namespace walkspec::graph {

inline constexpr std::size_t kEnumerateMaxOrder = 7;

inline std::uint64_t labelledGraphCount(std::size_t n) {
  return std::uint64_t(1) << (n * (n - 1) / 2);
}

// Labelled graph with the given index: bit b of the index is edge (i, j) in
// row-major upper-triangle order, so enumeration is lexicographic on the
// upper-triangle bit string. Deterministic and resumable for sharded sweeps.
inline Graph graphFromIndex(std::size_t n, std::uint64_t index) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((index >> bit) & 1) g.setEdge(i, j);
  return g;
}

// All 2^{n(n-1)/2} labelled graphs, in index order.
inline void enumerateGraphs(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n > kEnumerateMaxOrder)
    throw UnsupportedOrderError("enumerateGraphs: order exceeds guardrail");
  const std::uint64_t total = labelledGraphCount(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) fn(graphFromIndex(n, idx));
}

// One canonical representative per isomorphism class, over an index range
// (the range form supports sharded sweeps; representatives from different
// shards may overlap and must be merged by canonical form).
inline std::vector<Graph> isomorphismClassReps(std::size_t n, std::uint64_t lo, std::uint64_t hi) {
  if (n > kEnumerateMaxOrder)
    throw UnsupportedOrderError("isomorphismClassReps: order exceeds guardrail");
  std::set<CanonicalForm> seen;
  std::vector<Graph> reps;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    Graph g = graphFromIndex(n, idx);
    if (seen.insert(canonicalForm(g)).second) reps.push_back(canonicalGraph(g));
  }
  return reps;
}

inline std::vector<Graph> isomorphismClassReps(std::size_t n) {
  return isomorphismClassReps(n, 0, labelledGraphCount(n));
}

}  // namespace walkspec::graph
