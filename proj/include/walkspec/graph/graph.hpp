#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/int_matrix.hpp"

namespace walkspec::graph {

inline constexpr std::size_t kMaxOrder = 64;

// Simple undirected graph, no loops, order <= 64. Adjacency is stored as one
// 64-bit neighbour mask per vertex.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxOrder) throw UnsupportedOrderError("Graph: order out of range");
  }

  std::size_t order() const { return n_; }

  bool edge(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1u; }

  void setEdge(std::size_t u, std::size_t v, bool present = true) {
    if (u == v) throw DimensionError("Graph: loops not allowed");
    if (present) {
      adj_[u] |= std::uint64_t(1) << v;
      adj_[v] |= std::uint64_t(1) << u;
    } else {
      adj_[u] &= ~(std::uint64_t(1) << v);
      adj_[v] &= ~(std::uint64_t(1) << u);
    }
  }

  std::uint64_t neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(__builtin_popcountll(adj_[v]));
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  Graph relabel(const std::vector<std::size_t>& perm) const {
    // perm maps old vertex -> new vertex
    Graph h(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (edge(u, v)) h.setEdge(perm[u], perm[v]);
    return h;
  }

  Graph complement() const {
    Graph h(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (!edge(u, v)) h.setEdge(u, v);
    return h;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> adj_;
};

inline exact::IntMatrix adjacencyMatrix(const Graph& g) {
  const std::size_t n = g.order();
  exact::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.edge(i, j)) a(i, j) = 1;
  return a;
}

inline exact::IntMatrix permutationMatrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  exact::IntMatrix p(n, n);
  // row u has its 1 in column perm[u], so P^T A(g) P = A(relabel(g, perm))
  for (std::size_t u = 0; u < n; ++u) p(u, perm[u]) = 1;
  return p;
}

}  // namespace walkspec::graph
