#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/graph/graph.hpp"

namespace walkspec::graph {

inline constexpr std::size_t kCanonicalMaxOrder = 12;

// Upper-triangle bit string of the adjacency matrix under the canonical
// vertex ordering; equal forms iff isomorphic.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<std::uint8_t> canonicalBits;  // row-major upper triangle

  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

// Equitable colour refinement: split colour classes by the multiset of
// neighbour colours until stable. Colour ids are renumbered canonically
// (sorted by (old colour, signature)) so refinement itself is
// permutation-invariant.
inline void refineColours(const Graph& g, std::vector<int>& colour) {
  const std::size_t n = g.order();
  for (;;) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (std::size_t u = 0; u < n; ++u)
        if (g.edge(v, u)) sig.push_back(colour[u]);
      std::sort(sig.begin(), sig.end());
      keys[v] = {{colour[v], std::move(sig)}, v};
    }
    std::map<std::pair<int, std::vector<int>>, int> ids;
    for (const auto& [k, v] : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    bool changed = false;
    for (const auto& [k, v] : keys) {
      int c = ids[k];
      if (c != colour[v]) changed = true;
      colour[v] = c;
    }
    if (!changed) return;
  }
}

struct CanonSearch {
  const Graph& g;
  std::size_t n;
  std::vector<std::uint8_t> best;
  bool haveBest = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  std::vector<std::uint8_t> bitsFor(const std::vector<std::size_t>& order) const {
    // order[pos] = vertex placed at position pos
    std::vector<std::uint8_t> bits;
    bits.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        bits.push_back(g.edge(order[i], order[j]) ? 1 : 0);
    return bits;
  }

  void visitLeaf(const std::vector<int>& colour) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(colour[v])] = v;
    auto bits = bitsFor(order);
    if (!haveBest || bits < best) {
      best = std::move(bits);
      haveBest = true;
    }
  }

  void search(std::vector<int> colour) {
    refineColours(g, colour);
    // first colour class with more than one member is the branching cell
    std::vector<int> count(n, 0);
    for (int c : colour) ++count[static_cast<std::size_t>(c)];
    int cell = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (count[c] > 1) {
        cell = static_cast<int>(c);
        break;
      }
    if (cell < 0) {
      visitLeaf(colour);
      return;
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < n; ++v)
      if (colour[v] == cell) candidates.push_back(v);
    // interchangeable twins (N(u)\{v} == N(v)\{u}) need only one branch
    std::vector<std::size_t> pruned;
    for (std::size_t v : candidates) {
      bool dup = false;
      for (std::size_t u : pruned) {
        std::uint64_t mask = ~((std::uint64_t(1) << u) | (std::uint64_t(1) << v));
        if ((g.neighbours(u) & mask) == (g.neighbours(v) & mask)) {
          dup = true;
          break;
        }
      }
      if (!dup) pruned.push_back(v);
    }
    for (std::size_t v : pruned) {
      auto child = colour;
      // individualize v: give it its own colour just below its old cell
      for (std::size_t u = 0; u < n; ++u)
        if (child[u] >= cell && u != v) ++child[u];
      search(std::move(child));
    }
  }
};

}  // namespace detail

inline CanonicalForm canonicalForm(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw UnsupportedOrderError("canonicalForm: order exceeds guardrail");
  detail::CanonSearch s(g);
  s.search(std::vector<int>(g.order(), 0));
  return CanonicalForm{g.order(), std::move(s.best)};
}

inline bool isIsomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  return canonicalForm(g) == canonicalForm(h);
}

// Canonical relabelling of g (useful as a class representative).
inline Graph canonicalGraph(const Graph& g) {
  auto form = canonicalForm(g);
  Graph c(g.order());
  std::size_t bit = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j, ++bit)
      if (form.canonicalBits[bit]) c.setEdge(i, j);
  return c;
}

}  // namespace walkspec::graph
