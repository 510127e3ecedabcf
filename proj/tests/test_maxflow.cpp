#include "doctest.h"
#include "vconn/generators.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/oracle.hpp"

using namespace vconn;

TEST_SUITE("maxflow") {
  TEST_CASE("small separators") {
    Graph c6 = gen::cycle(6);
    Separator s = min_st_separator(c6, 0, 3);
    CHECK(s.exists);
    CHECK(s.value == 2);
    CHECK(s.vertices.size() == 2);
    CHECK(!min_st_separator(c6, 0, 1).exists);
    CHECK_THROWS_AS(min_st_separator(c6, 2, 2), InvariantError);
    Graph p = gen::petersen();
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v)
        if (!p.adjacent(u, v)) CHECK(min_st_separator(p, u, v).value == 3);
  }

  TEST_CASE("engine agrees with the independent oracle") {
    for (int seed = 0; seed < 40; ++seed) {
      Graph g = gen::random_connected(6 + seed % 20, 0.1 + 0.02 * (seed % 15), seed);
      for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t) {
          Separator a = min_st_separator(g, s, t);
          PairKappa b = brute_pair_kappa(g, s, t);
          REQUIRE(a.exists == b.separable);
          if (!a.exists) continue;
          CHECK(a.value == b.value);
          CHECK(static_cast<Weight>(a.vertices.size()) == a.value);
          VertexCut c = cut_from_separator(g, a.vertices, s);
          CHECK(validate_cut(g, c));
          CHECK(set_contains(c.R, t));
        }
    }
  }

  TEST_CASE("weighted digraph engine agrees with the oracle") {
    for (int seed = 0; seed < 30; ++seed) {
      WeightedDigraph d = gen::random_strong_digraph(5 + seed % 10, 0.3, 8, seed);
      for (int s = 0; s < d.n(); ++s)
        for (int t = 0; t < d.n(); ++t) {
          if (s == t) continue;
          Separator a = min_st_separator(d, s, t);
          PairKappa b = brute_pair_kappa(d, s, t);
          REQUIRE(a.exists == b.separable);
          if (!a.exists) continue;
          CHECK(a.value == b.value);
          CHECK(d.weight_of(a.vertices) == a.value);
          CHECK(validate_cut(d, cut_from_separator(d, a.vertices, s)));
        }
    }
  }

  TEST_CASE("separators are deterministic") {
    Graph g = gen::random_connected(25, 0.2, 9);
    for (int t = 1; t < 25; ++t) {
      if (g.adjacent(0, t)) continue;
      CHECK(min_st_separator(g, 0, t).vertices == min_st_separator(g, 0, t).vertices);
    }
  }

  TEST_CASE("separator from a vertex to a set") {
    Graph c6 = gen::cycle(6);
    CHECK(min_s_to_set_separator(c6, 0, {3}).value == min_st_separator(c6, 0, 3).value);
    Graph star = gen::star(4);
    CHECK(!min_s_to_set_separator(star, 0, {1, 2}).exists);
    for (int seed = 0; seed < 30; ++seed) {
      Graph g = gen::random_connected(12, 0.25, 100 + seed);
      VertexSet T{3, 7, 10};
      Separator s = min_s_to_set_separator(g, 0, T);
      bool adjacent = false;
      for (int t : T) adjacent |= g.adjacent(0, t);
      if (adjacent) {
        CHECK(!s.exists);
        continue;
      }
      REQUIRE(s.exists);
      // Brute force: contract T into one vertex and separate it from 0.
      std::vector<int> id(g.n());
      int next = 0;
      for (int v = 0; v < g.n(); ++v) id[v] = set_contains(T, v) ? -1 : next++;
      int sink = next;
      std::vector<std::pair<int, int>> e;
      for (auto [u, v] : g.edges()) {
        int a = id[u] < 0 ? sink : id[u], b = id[v] < 0 ? sink : id[v];
        if (a != b) e.emplace_back(std::min(a, b), std::max(a, b));
      }
      Graph h = Graph::from_edges_dedup(next + 1, e);
      CHECK(s.value == brute_pair_kappa(h, id[0], sink).value);
      for (int v : s.vertices) CHECK(!set_contains(T, v));
    }
  }

  TEST_CASE("rooted connectivity") {
    Graph star = gen::star(5);
    RootedResult r = rooted_connectivity(star, 1);
    CHECK(r.value == 1);
    CHECK(r.cut.S == VertexSet{0});
    Graph k5 = gen::complete(5);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : k5.edges())
      if (!(u == 0 && v == 1)) e.emplace_back(u, v);
    Graph k5m = Graph::from_edges(5, e);
    CHECK(rooted_connectivity(k5m, 0).value == 3);
    CHECK(rooted_connectivity(k5, 0).cut.no_cut);
    for (int seed = 0; seed < 20; ++seed) {
      Graph g = gen::random_connected(14, 0.3, 300 + seed);
      for (int a = 0; a < g.n(); a += 3) {
        RootedResult rr = rooted_connectivity(g, a);
        if (rr.cut.no_cut) continue;
        Weight best = g.n();
        for (int t = 0; t < g.n(); ++t)
          if (t != a && !g.adjacent(a, t)) best = std::min(best, brute_pair_kappa(g, a, t).value);
        CHECK(rr.value == best);
        CHECK(validate_cut(g, rr.cut));
        CHECK(set_contains(rr.cut.L, a));
      }
    }
  }

  TEST_CASE("weak separator") {
    Graph c5 = gen::cycle(5);
    CHECK(weak_separator(c5, {0}).value == 2);
    Graph g = gen::cliques_sharing(5, 2);
    VertexCut planted = brute_kappa(g);
    CHECK(weak_separator(g, planted.S).value <= static_cast<Weight>(planted.S.size()));
    for (int seed = 0; seed < 15; ++seed) {
      Graph h = gen::random_connected(10, 0.3, 500 + seed);
      VertexSet T{1, 4};
      RootedResult w = weak_separator(h, T);
      if (w.cut.no_cut) continue;
      CHECK(validate_cut(h, w.cut));
      // Brute force: the smallest S whose removal leaves a nonempty L outside
      // T with no path from L to T - S.
      Weight best = h.n();
      for (std::uint32_t m = 0; m < (1u << h.n()); ++m) {
        VertexSet S;
        for (int v = 0; v < h.n(); ++v)
          if (m >> v & 1) S.push_back(v);
        if (static_cast<Weight>(S.size()) >= best) continue;
        for (auto& comp : components_avoiding(h, S)) {
          if (!set_intersection(comp, T).empty()) continue;
          if (comp.size() + S.size() == static_cast<size_t>(h.n())) continue;
          bool touches = false;
          for (int v : set_neighborhood(h, comp)) touches |= !set_contains(S, v);
          if (!touches) best = static_cast<Weight>(S.size());
        }
      }
      CHECK(w.value == best);
    }
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("named graphs") {
    CHECK(brute_kappa(gen::petersen()).value == 3);
    CHECK(brute_kappa(gen::complete(5)).no_cut);
    CHECK(brute_kappa(gen::complete(5)).value == 4);
    CHECK(brute_kappa(gen::path(6)).value == 1);
    Graph g = gen::grid(4, 4);
    CHECK(brute_pair_kappa(g, 0, 15).value == 2);
    CHECK(!brute_pair_kappa(g, 0, 1).separable);
    CHECK(brute_pair_kappa(gen::cycle(6), 0, 3).value == 2);
  }

  TEST_CASE("flow oracle agrees with separator enumeration") {
    for (int seed = 0; seed < 40; ++seed) {
      Graph g = gen::random_connected(5 + seed % 10, 0.15 + 0.02 * (seed % 20), 900 + seed);
      VertexCut c = brute_kappa(g);
      CHECK(c.value == subset_kappa(g));
      if (c.is_cut()) CHECK(validate_cut(g, c));
    }
    for (int seed = 0; seed < 30; ++seed) {
      WeightedDigraph d = gen::random_strong_digraph(4 + seed % 9, 0.3, 6, 700 + seed);
      VertexCut c = brute_kappa(d);
      if (c.no_cut) {
        CHECK(subset_kappa(d) == -1);
        continue;
      }
      CHECK(c.value == subset_kappa(d));
      CHECK(validate_cut(d, c));
      CHECK(d.weight_of(c.S) == c.value);
    }
  }

  TEST_CASE("size guards") {
    CHECK_THROWS_AS(brute_kappa(gen::cycle(65)), SizeGuard);
    CHECK_THROWS_AS(brute_kappa(gen::random_strong_digraph(25, 0.2, 2, 1)), SizeGuard);
  }

  TEST_CASE("planted instances verify and reproduce") {
    PlantedInstance u = generate_planted(PlantedKind::Unbalanced, {2, 3, 20, 0.6, 1, 200}, 1);
    CHECK(u.planted.value == 3);
    CHECK(brute_kappa(u.graph).value == 3);
    CHECK(reverify(u));
    PlantedInstance l = generate_planted(PlantedKind::Lopsided, {2, 2, 12, 0.6, 4, 400}, 2);
    CHECK(l.digraph.weight_of(l.planted.R) >= 16 * l.digraph.weight_of(l.planted.L));
    CHECK(brute_kappa(l.digraph).value == l.planted.value);
    CHECK(reverify(l));
    PlantedInstance s = generate_planted(PlantedKind::Symmetric, {5, 2, 6, 0.6, 3, 400}, 3);
    CHECK(brute_kappa(s.digraph).value == s.planted.value);
    PlantedInstance b = generate_planted(PlantedKind::BalancedTerminal, {8, 3, 9, 0.7, 1, 400}, 4);
    CHECK(brute_kappa(b.graph).value == 3);
    CHECK_THROWS_AS(generate_planted(PlantedKind::Unbalanced, {2, 3, 0, 0.6, 1, 5}, 1), GenerationFailed);
  }

  TEST_CASE("checkers report counterexamples") {
    VertexSet A{0, 1, 2, 3}, B{4, 5, 6, 7};
    PairFamily complete = complete_pair_family(A, B, 8);
    CHECK(check_crossing_family(complete, A, B, 2, 2).verdict);
    PairFamily empty(8);
    empty.finalize();
    CheckResult r = check_crossing_family(empty, A, B, 2, 2);
    CHECK(!r.verdict);
    CHECK(!r.counterexample.empty());
    SubsetFamily f{6, {{0, 1}}, "handmade"};
    CHECK(!check_selector(f, 6, 2, 0.5).verdict);
  }
}
