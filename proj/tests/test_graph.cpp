#include <sstream>

#include "doctest.h"
#include "vconn/generators.hpp"
#include "vconn/graph.hpp"
#include "vconn/oracle.hpp"

using namespace vconn;

TEST_SUITE("graph") {
  TEST_CASE("parse a path and weighted digraph") {
    std::istringstream in("p 3 2 u\ne 0 1\ne 1 2\n");
    ParsedGraph p = parse_graph(in);
    CHECK(!p.directed);
    CHECK(p.graph.n() == 3);
    CHECK(p.graph.m() == 2);
    CHECK(p.graph.adjacent(0, 1));
    CHECK(!p.graph.adjacent(0, 2));

    std::istringstream w("c weighted\np 2 1 d\na 0 1\nw 0 5\n");
    ParsedGraph q = parse_graph(w);
    CHECK(q.directed);
    CHECK(q.weighted);
    CHECK(q.digraph.weight(0) == 5);
    CHECK(q.digraph.weight(1) == 1);
  }

  TEST_CASE("parse errors carry line numbers") {
    std::istringstream loop("p 2 1 u\ne 0 0\n");
    try {
      parse_graph(loop);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream range("p 2 1 u\ne 0 7\n");
    CHECK_THROWS_AS(parse_graph(range), ParseError);
    std::istringstream dup("p 2 2 u\ne 0 1\ne 1 0\n");
    CHECK_THROWS_AS(parse_graph(dup), InvariantError);
  }

  TEST_CASE("round trip through the text format") {
    Graph g = gen::petersen();
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(parse_graph(in).graph.edges() == g.edges());
    WeightedDigraph d = gen::random_strong_digraph(7, 0.3, 5, 3);
    std::ostringstream out2;
    write_digraph(out2, d);
    std::istringstream in2(out2.str());
    ParsedGraph p = parse_graph(in2);
    CHECK(p.digraph.arcs() == d.arcs());
    CHECK(p.digraph.weights() == d.weights());
  }

  TEST_CASE("symmetric difference sizes") {
    Graph k4 = gen::complete(4);
    CHECK(symdiff_size(k4, 0, 3) == 2);
    CHECK(symdiff_size(k4, 2, 2) == 0);
    Graph p = gen::petersen();
    // Adjacent Petersen vertices share no neighbor: 3 + 3 neighbors, each
    // containing the other endpoint.
    CHECK(symdiff_size(p, 0, 1) == 6);
  }

  TEST_CASE("symmetric difference obeys the triangle inequality") {
    for (int seed = 0; seed < 20; ++seed) {
      Graph g = gen::random_connected(15, 0.3, seed);
      for (int a = 0; a < 15; ++a)
        for (int b = 0; b < 15; ++b)
          for (int c = 0; c < 15; c += 3) {
            CHECK(symdiff_size(g, a, b) == symdiff_size(g, b, a));
            CHECK(symdiff_size(g, a, c) <= symdiff_size(g, a, b) + symdiff_size(g, b, c));
          }
    }
  }

  TEST_CASE("weighted symmetric difference matches direct sums") {
    WeightedDigraph d = gen::random_strong_digraph(5, 0.5, 7, 11);
    for (int u = 0; u < 5; ++u)
      for (int v = 0; v < 5; ++v) {
        VertexSet a(d.out(u).begin(), d.out(u).end()), b(d.out(v).begin(), d.out(v).end());
        Weight expect = d.weight_of(set_minus(a, b)) + d.weight_of(set_minus(b, a));
        CHECK(weighted_symdiff(d, u, v) == expect);
      }
    CHECK(weighted_symdiff(d, 2, 2) == 0);
  }

  TEST_CASE("sparsification keeps min(kappa, k)") {
    Graph c6 = gen::cycle(6);
    CHECK(ni_sparsify(c6, 2).edges() == c6.edges());
    Graph k8 = gen::complete(8);
    Graph s = ni_sparsify(k8, 3);
    CHECK(s.m() <= 3 * 8);
    CHECK(brute_kappa(s).value >= 3);
    Graph p = gen::petersen();
    CHECK(ni_sparsify(p, 100).edges() == p.edges());
    for (int seed = 0; seed < 30; ++seed) {
      Graph g = gen::random_connected(14, 0.4, seed);
      Weight kappa = brute_kappa(g).value;
      for (int k = 1; k <= 5; ++k) {
        Graph h = ni_sparsify(g, k);
        CHECK(h.m() <= static_cast<std::int64_t>(k) * g.n());
        Weight kh = brute_kappa(h).value;
        CHECK(std::min<Weight>(kh, k) == std::min<Weight>(kappa, k));
        CHECK(kh <= kappa);
      }
    }
  }

  TEST_CASE("cut validation") {
    Graph p3 = gen::path(3);
    VertexCut ok{{0}, {1}, {2}};
    CHECK(validate_cut(p3, ok));
    VertexCut bad{{0, 1}, {}, {2}};
    CHECK(!validate_cut(p3, bad));
    WeightedDigraph cyc = gen::weighted_cycle({1, 1, 1});
    CHECK(validate_cut(cyc, VertexCut{{0}, {1}, {2}}));
    // Moving vertices into S keeps a valid cut valid.
    Graph g = gen::cliques_sharing(5, 2);
    VertexCut c = brute_kappa(g);
    REQUIRE(validate_cut(g, c));
    if (c.L.size() > 1) {
      VertexCut moved = c;
      moved.S = set_union(moved.S, {moved.L.back()});
      moved.L.pop_back();
      CHECK(validate_cut(g, moved));
    }
  }

  TEST_CASE("set neighborhoods") {
    Graph s = gen::star(4);
    CHECK(set_neighborhood(s, {0}) == VertexSet{1, 2, 3, 4});
    CHECK(set_neighborhood(s, iota_set(5)).empty());
    Graph g = gen::random_connected(12, 0.3, 5);
    VertexSet a{1, 4, 7};
    VertexSet expect;
    for (int v : a)
      for (int y : g.adj(v)) expect.push_back(y);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(set_neighborhood(g, a) == set_minus(expect, a));
    WeightedDigraph d = gen::weighted_cycle({1, 2, 3});
    CHECK(set_neighborhood(d, {0}, Direction::Out) == VertexSet{1});
    CHECK(set_neighborhood(d, {0}, Direction::In) == VertexSet{2});
  }

  TEST_CASE("weights that overflow are rejected") {
    std::vector<Weight> w{Weight{1} << 62, Weight{1} << 62, 1};
    CHECK_THROWS_AS(WeightedDigraph::from_arcs(3, {{0, 1}}, w), InvariantError);
    CHECK_THROWS_AS(WeightedDigraph::from_arcs(2, {{0, 1}}, {0, 1}), InvariantError);
  }
}
