#include <random>

#include "doctest.h"
#include "vconn/config.hpp"
#include "vconn/generators.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/oracle.hpp"
#include "vconn/unweighted.hpp"

using namespace vconn;

namespace {

// Brute (T, phi)-expansion check over every L of a small graph.
bool brute_is_expander(const Graph& h, const VertexSet& T, double phi) {
  const int n = h.n();
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
    VertexSet L;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) L.push_back(v);
    VertexCut c;
    c.L = L;
    c.S = set_neighborhood(h, L);
    c.R = set_minus(complement(n, L), c.S);
    if (c.R.empty()) continue;
    try {
      Rational r = terminal_expansion(h, T, c);
      if (r.value() < phi) return false;
    } catch (const UndefinedExpansion&) {
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("expander") {
  TEST_CASE("terminal expansion formula") {
    Graph c6 = gen::cycle(6);
    VertexCut c{{1, 2}, {0, 3}, {4, 5}};
    c.value = 2;
    Rational r = terminal_expansion(c6, iota_set(6), c);
    CHECK(r == Rational{1, 2});
    CHECK_THROWS_AS(terminal_expansion(c6, {4, 5}, c), UndefinedExpansion);
    std::mt19937_64 rng(2);
    Graph g = gen::random_connected(14, 0.3, 2);
    for (int t = 0; t < 200; ++t) {
      VertexSet L, T;
      for (int v = 0; v < 14; ++v) {
        if (rng() % 4 == 0) L.push_back(v);
        if (rng() % 2 == 0) T.push_back(v);
      }
      if (L.empty()) continue;
      VertexCut cut;
      cut.L = L;
      cut.S = set_neighborhood(g, L);
      cut.R = set_minus(complement(14, L), cut.S);
      std::int64_t a = 0, b = 0;
      for (int v : T) {
        bool s = set_contains(cut.S, v);
        a += s || set_contains(cut.L, v);
        b += s || set_contains(cut.R, v);
      }
      if (std::min(a, b) == 0) {
        CHECK_THROWS_AS(terminal_expansion(g, T, cut), UndefinedExpansion);
      } else {
        Rational r2 = terminal_expansion(g, T, cut);
        CHECK(r2.num * std::min(a, b) == static_cast<std::int64_t>(cut.S.size()) * r2.den);
      }
    }
  }

  TEST_CASE("decomposition of an expander is trivial") {
    ExpanderDecomposition ed = expander_decomposition(gen::complete(9), iota_set(9), 0.25);
    CHECK(ed.X.empty());
    CHECK(ed.pieces.size() == 1);
    ExpanderDecomposition one = expander_decomposition(gen::path(12), {5}, 0.25);
    CHECK(one.X.empty());
    CHECK(one.pieces.size() == 1);
  }

  TEST_CASE("two cliques sharing a vertex split at the shared vertex") {
    Graph g = gen::cliques_sharing(6, 1);
    ExpanderDecomposition ed = expander_decomposition(g, iota_set(g.n()), 0.25);
    VertexCut truth = brute_kappa(g);
    CHECK(set_minus(truth.S, ed.X).empty());
    CHECK(ed.pieces.size() == 2);
  }

  TEST_CASE("decomposition invariants on random graphs") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Graph g = gen::random_connected(12 + static_cast<int>(seed % 20), 0.12, seed);
      VertexSet T;
      for (int v = 0; v < g.n(); v += 1 + static_cast<int>(seed % 2)) T.push_back(v);
      ExpanderDecomposition ed = expander_decomposition(g, T, 0.25);
      std::vector<int> owner(g.n(), -1);
      for (int v : ed.X) owner[v] = -2;
      for (int i = 0; i < static_cast<int>(ed.pieces.size()); ++i)
        for (int v : ed.pieces[i]) {
          CHECK(owner[v] == -1);
          owner[v] = i;
        }
      for (int v = 0; v < g.n(); ++v) CHECK(owner[v] != -1);
      for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0) CHECK(owner[u] == owner[v]);
      for (size_t i = 0; i < ed.pieces.size(); ++i)
        if (ed.pieces[i].size() <= 12) {
          Graph h = g.induced(ed.pieces[i]);
          VertexSet local;
          for (int j = 0; j < static_cast<int>(ed.pieces[i].size()); ++j)
            if (set_contains(T, ed.pieces[i][j])) local.push_back(j);
          CHECK(ed.certificates[i] == "exhaustive");
          CHECK(brute_is_expander(h, local, 0.25));
        }
    }
  }

  TEST_CASE("shaving") {
    Graph kb = gen::complete_bipartite(6, 5);
    CHECK(shaving(kb, iota_set(6), 0) == iota_set(6));
    // A: 100 vertices, B: 12 vertices; each member of A' misses at most a of B.
    const int a = 2;
    std::mt19937_64 rng(4);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 100; ++u) {
      if (u == 99) {
        for (int b = 112; b < 120; ++b) e.emplace_back(u, b);
        continue;
      }
      int miss1 = static_cast<int>(rng() % 12), miss2 = static_cast<int>(rng() % 12);
      for (int b = 0; b < 12; ++b)
        if (b != miss1 && b != miss2) e.emplace_back(u, 100 + b);
    }
    Graph h = Graph::from_edges(120, e);
    VertexSet A = iota_set(100);
    VertexSet r = shaving(h, A, a);
    CHECK(set_minus(iota_set(99), r).empty());
    for (int u : r)
      for (int v : r) CHECK(symdiff_size(h, u, v) <= 5 * a);
    CHECK(!set_contains(r, 99));
    Graph g = gen::random_connected(30, 0.3, 1);
    VertexSet B{1, 4, 9, 16, 25};
    CHECK(set_minus(shaving(g, B, 1), B).empty());
  }
}

TEST_SUITE("unweighted") {
  TEST_CASE("terminal reduction shrinks and returns valid cuts") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph g = gen::random_min_degree(30, 0.15, 4, seed);
      VertexSet T = iota_set(g.n());
      int rounds = 0;
      while (!T.empty() && rounds < 20) {
        TerminalReductionResult r = terminal_reduction(g, T, g.min_degree());
        CHECK(r.terminals.size() <= static_cast<size_t>(0.9 * static_cast<double>(T.size())));
        if (r.cut.is_cut()) CHECK(validate_cut(g, r.cut));
        for (auto& c : r.stats.candidates) CHECK(validate_cut(g, c));
        const auto& st = r.stats;
        CHECK(st.t_big <= 0.8 * st.terminals_in);
        CHECK(st.t_xbar <= std::max(1.0, 0.01 * st.terminals_in));
        if (!st.trimmed) CHECK(st.x + st.t_big + st.t_small + st.t_xbar >= st.terminals_out);
        CHECK(set_minus(r.terminals, T).empty());
        T = r.terminals;
        ++rounds;
      }
      CHECK(T.empty());
    }
  }

  TEST_CASE("unbalanced case") {
    CHECK(unbalanced_vc(gen::cycle(9)).value == 2);
    VertexCut s = unbalanced_vc(gen::star(7));
    CHECK(s.value == 1);
    CHECK(s.S == VertexSet{0});
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      PlantedParams p;
      p.l = 1 + static_cast<int>(seed % 3);
      p.s = 4;
      p.r = 20;
      PlantedInstance inst = generate_planted(PlantedKind::Unbalanced, p, seed);
      VertexCut c = unbalanced_vc(inst.graph);
      CHECK_MESSAGE(c.value == inst.planted.value, "seed=" << seed);
      CHECK(validate_cut(inst.graph, c));
    }
  }

  TEST_CASE("driver on named graphs") {
    CHECK(vertex_connectivity_unweighted(gen::petersen()).value == 3);
    VertexCut two = vertex_connectivity_unweighted(gen::cliques_sharing(6, 2));
    CHECK(two.value == 2);
    CHECK(two.S == brute_kappa(gen::cliques_sharing(6, 2)).S);
    VertexCut k7 = vertex_connectivity_unweighted(gen::complete(7));
    CHECK(k7.no_cut);
    CHECK(k7.value == 6);
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    VertexCut d = vertex_connectivity_unweighted(split);
    CHECK(d.value == 0);
    CHECK(validate_cut(split, d));
    CHECK(vertex_connectivity_unweighted(gen::grid(4, 5)).value == 2);
    CHECK(vertex_connectivity_unweighted(gen::complete_minus_matching(8)).value == 6);
  }

  TEST_CASE("driver matches the oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      Graph g = gen::random_connected(12 + static_cast<int>(seed % 14), 0.15 + 0.02 * static_cast<double>(seed % 6), seed);
      VertexCut c = vertex_connectivity_unweighted(g);
      CHECK_MESSAGE(c.value == brute_kappa(g).value, "seed=" << seed);
      CHECK(validate_cut(g, c));
    }
  }

  TEST_CASE("results do not depend on the worker count") {
    Graph g = gen::random_min_degree(26, 0.2, 4, 7);
    VertexCut one = vertex_connectivity_unweighted(g);
    ScopedConfig guard;
    config().jobs = 3;
    VertexCut three = vertex_connectivity_unweighted(g);
    CHECK(one.S == three.S);
    CHECK(one.L == three.L);
  }
}
