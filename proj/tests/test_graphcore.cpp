#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "worked_examples.hpp"
#include "walkspec/graph/canonical.hpp"
#include "walkspec/graph/enumerate.hpp"
#include "walkspec/graph/graph.hpp"
#include "walkspec/graph/graph6.hpp"

using namespace walkspec;
using graph::Graph;

namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.setEdge(i, i + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.setEdge(n - 1, 0);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.setEdge(0, i);
  return g;
}

}  // namespace

TEST_CASE("adjacencyMatrix") {
  Graph single(1);
  auto a1 = graph::adjacencyMatrix(single);
  CHECK(a1(0, 0) == 0);

  Graph k2(2);
  k2.setEdge(0, 1);
  auto a2 = graph::adjacencyMatrix(k2);
  CHECK(a2(0, 1) == 1);
  CHECK(a2(1, 0) == 1);
  CHECK(a2(0, 0) == 0);

  auto g = testdata::graphFromAdjacency(testdata::kExample1G);
  auto a = graph::adjacencyMatrix(g);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(a(i, j) == testdata::kExample1G[i][j]);
}

TEST_CASE("complement") {
  Graph empty3(3);
  Graph k3 = empty3.complement();
  CHECK(k3.edge(0, 1));
  CHECK(k3.edge(1, 2));
  CHECK(k3.edge(0, 2));

  SECTION("complement is an involution on every graph up to n = 6") {
    for (std::size_t n = 1; n <= 6; ++n)
      graph::enumerateGraphs(n, [](const Graph& g) {
        CHECK(g.complement().complement() == g);
      });
  }

  SECTION("A(complement) = J - I - A") {
    std::mt19937 rng(3);
    Graph g = oracle::randomGraph(rng, 7);
    auto a = graph::adjacencyMatrix(g);
    auto ac = graph::adjacencyMatrix(g.complement());
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        CHECK(a(i, j) + ac(i, j) == (i == j ? 0 : 1));
  }
}

TEST_CASE("graph6 codec") {
  Graph k2 = graph::parseGraph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edge(0, 1));

  Graph one(1);
  CHECK(graph::encodeGraph6(one) == "@");
  CHECK(graph::encodeGraph6(path(4)) == "Ch");
  CHECK(graph::parseGraph6(">>graph6<<A_").edge(0, 1));

  CHECK(graph::encodeGraph6(testdata::graphFromAdjacency(testdata::kExample1G)) ==
        testdata::kG6Example1G);
  CHECK(graph::encodeGraph6(testdata::graphFromAdjacency(testdata::kExample1H)) ==
        testdata::kG6Example1H);
  CHECK(graph::encodeGraph6(testdata::graphFromAdjacency(testdata::kExample2N)) ==
        testdata::kG6Example2N);

  SECTION("round trip for every graph with n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n)
      graph::enumerateGraphs(n, [](const Graph& g) {
        CHECK(graph::parseGraph6(graph::encodeGraph6(g)) == g);
      });
  }

  SECTION("round trip for random graphs up to n = 32") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> order(1, 32);
    for (int it = 0; it < 1000; ++it) {
      Graph g = oracle::randomGraph(rng, order(rng));
      CHECK(graph::parseGraph6(graph::encodeGraph6(g)) == g);
    }
  }

  SECTION("round trip through the extended order field (n = 63, 64)") {
    std::mt19937 rng(23);
    for (std::size_t n : {63, 64}) {
      Graph g = oracle::randomGraph(rng, n);
      std::string enc = graph::encodeGraph6(g);
      CHECK(enc[0] == '~');
      CHECK(graph::parseGraph6(enc) == g);
    }
  }

  SECTION("malformed input reports a byte offset") {
    CHECK_THROWS_AS(graph::parseGraph6(""), ParseError);
    CHECK_THROWS_AS(graph::parseGraph6("D"), ParseError);       // truncated edge data
    CHECK_THROWS_AS(graph::parseGraph6("A_X"), ParseError);     // trailing characters
    CHECK_THROWS_AS(graph::parseGraph6("A\x1f"), ParseError);   // out-of-range byte
    CHECK_THROWS_AS(graph::parseGraph6("Bw{"), ParseError);
    try {
      graph::parseGraph6("A\x1f");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset == 1);
    }
    // non-zero padding bits: n=2 needs 1 edge bit, the other 5 must be 0
    CHECK_THROWS_AS(graph::parseGraph6("A`"), ParseError);
  }
}

TEST_CASE("canonicalForm") {
  SECTION("relabellings of P4 agree, K_{1,3} differs") {
    Graph p4 = path(4);
    auto base = graph::canonicalForm(p4);
    std::mt19937 rng(31);
    for (int it = 0; it < 20; ++it)
      CHECK(graph::canonicalForm(p4.relabel(oracle::randomPermutation(rng, 4))) == base);
    CHECK(graph::canonicalForm(star(3)) != base);
  }

  SECTION("permutation invariance on random graphs") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<std::size_t> order(2, 8);
    for (int it = 0; it < 100; ++it) {
      Graph g = oracle::randomGraph(rng, order(rng));
      auto perm = oracle::randomPermutation(rng, g.order());
      CHECK(graph::canonicalForm(g.relabel(perm)) == graph::canonicalForm(g));
    }
  }

  SECTION("example pair is non-isomorphic") {
    CHECK(graph::canonicalForm(testdata::graphFromAdjacency(testdata::kExample1G)) !=
          graph::canonicalForm(testdata::graphFromAdjacency(testdata::kExample1H)));
  }

  SECTION("order guardrail") {
    CHECK_THROWS_AS(graph::canonicalForm(Graph(13)), UnsupportedOrderError);
  }

  SECTION("hard instances: vertex-transitive graphs") {
    // cycle C_12 and the Petersen graph exercise the branch-and-bound path
    Graph c12 = cycle(12);
    std::mt19937 rng(41);
    auto base = graph::canonicalForm(c12);
    CHECK(graph::canonicalForm(c12.relabel(oracle::randomPermutation(rng, 12))) == base);

    Graph petersen(10);
    for (std::size_t i = 0; i < 5; ++i) {
      petersen.setEdge(i, (i + 1) % 5);
      petersen.setEdge(i, i + 5);
      petersen.setEdge(i + 5, 5 + (i + 2) % 5);
    }
    auto pbase = graph::canonicalForm(petersen);
    CHECK(graph::canonicalForm(petersen.relabel(oracle::randomPermutation(rng, 10))) == pbase);
  }
}

TEST_CASE("isIsomorphic") {
  std::mt19937 rng(43);
  Graph g = oracle::randomGraph(rng, 6);
  CHECK(graph::isIsomorphic(g, g.relabel(oracle::randomPermutation(rng, 6))));
  CHECK_FALSE(graph::isIsomorphic(cycle(5), path(5)));
  CHECK_FALSE(graph::isIsomorphic(path(4), path(5)));  // order mismatch is false, not an error

  SECTION("agrees with permutation search on all pairs at n = 4") {
    std::vector<Graph> all;
    graph::enumerateGraphs(4, [&](const Graph& g4) { all.push_back(g4); });
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = i; j < all.size(); j += 5)
        CHECK(graph::isIsomorphic(all[i], all[j]) == oracle::bruteForceIsomorphic(all[i], all[j]));
  }

  SECTION("agrees with permutation search on random pairs at n = 6") {
    for (int it = 0; it < 500; ++it) {
      Graph a = oracle::randomGraph(rng, 6);
      // mix in relabellings so the positive case shows up often
      Graph b = (it % 3 == 0) ? a.relabel(oracle::randomPermutation(rng, 6))
                              : oracle::randomGraph(rng, 6);
      CHECK(graph::isIsomorphic(a, b) == oracle::bruteForceIsomorphic(a, b));
    }
  }
}

TEST_CASE("enumerateGraphs") {
  std::size_t count = 0;
  graph::enumerateGraphs(3, [&](const Graph&) { ++count; });
  CHECK(count == 8);
  CHECK(graph::isomorphismClassReps(3).size() == 4);
  CHECK(graph::isomorphismClassReps(4).size() == 11);
  CHECK(graph::isomorphismClassReps(5).size() == 34);
  CHECK_THROWS_AS(graph::enumerateGraphs(8, [](const Graph&) {}), UnsupportedOrderError);

  SECTION("labelled stream yields each graph exactly once") {
    std::set<std::string> seen;
    graph::enumerateGraphs(4, [&](const Graph& g) { seen.insert(graph::encodeGraph6(g)); });
    CHECK(seen.size() == 64);
  }
}
