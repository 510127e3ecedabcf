#include <random>

#include "doctest.h"
#include "vconn/config.hpp"
#include "vconn/generators.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/oracle.hpp"
#include "vconn/weighted.hpp"

using namespace vconn;

namespace {

bool crosses(const PairFamily& p, const VertexSet& L, const VertexSet& R, bool either_direction) {
  for (auto [u, v] : p.pairs()) {
    if (set_contains(L, u) && set_contains(R, v)) return true;
    if (either_direction && set_contains(R, u) && set_contains(L, v)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("weighted") {
  TEST_CASE("identify_vlow thresholds in-weight from the cluster") {
    // Vertex 0 points at 1 and 2; C = {0}.
    auto d = WeightedDigraph::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 0}}, {2, 1, 1, 1});
    CHECK(identify_vlow(d, {0}) == VertexSet{0, 3});
    // Every vertex receives an arc from each member of C = {3}: only 0 does.
    CHECK(identify_vlow(d, {3}) == VertexSet{1, 2, 3});
    auto k3 = WeightedDigraph::from_graph(gen::complete(3));
    CHECK(identify_vlow(k3, {0, 1, 2}).size() == 3);  // each vertex misses itself
    auto star = WeightedDigraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}}, {1, 1, 1});
    CHECK(identify_vlow(star, {0}) == VertexSet{0});
  }

  TEST_CASE("weight buckets") {
    CHECK(weight_bucket(1) == 1);
    CHECK(weight_bucket(2) == 2);
    CHECK(weight_bucket(3) == 2);
    CHECK(weight_bucket(4) == 3);
    CHECK(weight_bucket(8) == 4);
  }

  TEST_CASE("lopsided pairs with one weight bucket collapse to one family") {
    auto d = gen::random_strong_digraph(12, 0.3, 1, 3);
    VertexSet C{0, 1, 2, 3}, low{4, 5, 6, 7, 8, 9, 10, 11};
    PairFamily p = lopsided_pairs(d, C, low, 2, 4);
    PairFamily q = asymmetric_crossing_family(C, low, 1, 1);
    CHECK(p.size() == q.size());
    // Negative r at small n clamps to r = 1: the family is all of C x V_low.
    CHECK(p.size() == C.size() * low.size());
  }

  TEST_CASE("sparsify_lopsided builds the documented instance") {
    auto d = gen::random_strong_digraph(14, 0.3, 6, 11);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      VertexSet C;
      for (int v = 0; v < d.n(); ++v)
        if (rng() % 3 == 0) C.push_back(v);
      if (C.empty()) C.push_back(0);
      const int s = C[rng() % C.size()];
      int t = static_cast<int>(rng() % d.n());
      if (t == s) continue;
      SparsifiedInstance inst = sparsify_lopsided(d, s, t, C);
      VertexSet nc = set_neighborhood(d, C, Direction::Out);
      CHECK(inst.original == set_union(set_union(C, nc), VertexSet{t}));
      // Expected arc set from the definition.
      std::vector<char> in_c(d.n(), 0), in_vs(d.n(), 0), in_so(d.n(), 0);
      for (int v : C) in_c[v] = 1;
      for (int v : inst.original) in_vs[v] = 1;
      for (int v : d.out(s)) in_so[v] = 1;
      std::vector<std::pair<int, int>> expect;
      for (auto [u, v] : d.arcs())
        if ((in_c[u] || in_c[v]) && in_vs[u] && in_vs[v] && !(in_so[u] && in_so[v])) expect.emplace_back(u, v);
      for (int u : nc)
        if (u != t) expect.emplace_back(u, t);
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      std::vector<std::pair<int, int>> got;
      for (auto [u, v] : inst.graph.arcs()) got.emplace_back(inst.original[u], inst.original[v]);
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
      // Any separator found is a separator of D.
      Separator sep = min_st_separator(inst.graph, inst.s, inst.t);
      if (sep.exists) {
        VertexSet mapped;
        for (int v : sep.vertices) mapped.push_back(inst.original[v]);
        std::sort(mapped.begin(), mapped.end());
        VertexCut c = cut_from_separator(d, mapped, s);
        CHECK(set_contains(c.R, t));
        CHECK(validate_cut(d, c));
        PairKappa truth = brute_pair_kappa(d, s, t);
        CHECK(sep.value >= truth.value);
      }
    }
    CHECK_THROWS_AS(sparsify_lopsided(d, 5, 6, VertexSet{0, 1}), InvariantError);
  }

  TEST_CASE("sparsify_lopsided with C = V and an isolated source adds only sink arcs") {
    auto d = WeightedDigraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 1, 1, 1});
    // N^out(2) = {3} has no internal arcs, so nothing is removed.
    SparsifiedInstance inst = sparsify_lopsided(d, 2, 0, iota_set(4));
    CHECK(inst.graph.m() == d.m());
  }

  TEST_CASE("sparsify_symmetric preserves pair connectivity") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto d = gen::random_strong_digraph(11, 0.35, 5, seed);
      for (int s = 0; s < d.n(); ++s)
        for (int t = 0; t < d.n(); ++t) {
          if (s == t || d.has_arc(s, t)) continue;
          WeightedDigraph h = sparsify_symmetric(d, s, t);
          CHECK(h.m() <= d.m());
          Separator sep = min_st_separator(h, s, t);
          REQUIRE(sep.exists);
          CHECK(sep.value == brute_pair_kappa(d, s, t).value);
        }
    }
    auto cyc = gen::weighted_cycle({1, 2, 3, 4});
    CHECK(sparsify_symmetric(cyc, 0, 2).m() == cyc.m());
  }

  TEST_CASE("symmetric pairs cross planted symmetric cuts") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      PlantedParams pp;
      pp.l = 4;
      pp.s = 3;
      pp.r = 6;
      pp.max_weight = 4;
      PlantedInstance inst = generate_planted(PlantedKind::Symmetric, pp, seed);
      const auto& d = inst.digraph;
      Weight wl = d.weight_of(inst.planted.L);
      Weight l = 1;
      while (2 * l <= wl) l *= 2;
      PairFamily p = symmetric_pairs(d, l);
      CHECK(crosses(p, inst.planted.L, inst.planted.R, true));
    }
    auto d = gen::random_strong_digraph(9, 0.3, 1, 2);
    CHECK(symmetric_pairs(d, 1).size() == 9u * 8u);
  }

  TEST_CASE("lopsided pairs cross planted lopsided cuts") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      PlantedParams pp;
      pp.l = 2;
      pp.s = 3;
      pp.r = 14;
      pp.max_weight = 4;
      PlantedInstance inst = generate_planted(PlantedKind::Lopsided, pp, seed);
      const auto& d = inst.digraph;
      const VertexCut& cut = inst.planted;
      Weight wl = d.weight_of(cut.L), wr = d.weight_of(cut.R);
      Weight l = 1, r = 1;
      while (2 * l <= wl) l *= 2;
      while (2 * r <= wr) r *= 2;
      Clustering cl = weighted_cnc(d, 2 * l);
      bool found = false;
      for (const VertexSet& C : cl.clusters) {
        if (set_minus(cut.L, C).size() > 0) continue;
        VertexSet low = identify_vlow(d, C);
        if (set_intersection(low, cut.R).empty()) continue;
        found = found || crosses(lopsided_pairs(d, C, low, l, r), cut.L, cut.R, false);
      }
      CHECK(found);
    }
  }

  TEST_CASE("branches and driver on named digraphs") {
    auto cyc = gen::weighted_cycle({3, 1, 4});
    CHECK(vertex_connectivity_weighted(cyc).value == 1);
    CHECK(lopsided_vc(cyc).value == 1);
    // Pairs keep their source in the heavier bucket, so the crossing pair may
    // only appear on the reversed digraph.
    CHECK(std::min(symmetric_vc(cyc).value, symmetric_vc(cyc.reversed()).value) == 1);
    auto k4 = WeightedDigraph::from_graph(gen::complete(4));
    CHECK(vertex_connectivity_weighted(k4).no_cut);
    CHECK_FALSE(vertex_connectivity_weighted(k4).has_value);
    CHECK(lopsided_vc(k4).no_cut);
    auto path = WeightedDigraph::from_arcs(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    VertexCut z = vertex_connectivity_weighted(path);
    CHECK(z.value == 0);
    CHECK(z.S.empty());
    CHECK(validate_cut(path, z));
  }

  TEST_CASE("driver matches the weighted oracle on random digraphs") {
    counters().reset();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = 5 + static_cast<int>(rng() % 10);
      const double p = 0.15 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
      const Weight w = 1 + static_cast<Weight>(rng() % 8);
      auto d = gen::random_strong_digraph(n, p, w, seed);
      VertexCut truth = brute_kappa(d);
      WeightedRunStats st;
      VertexCut got = vertex_connectivity_weighted(d, &st);
      INFO("seed " << seed << " n " << n);
      CHECK(got.no_cut == truth.no_cut);
      if (!truth.no_cut) {
        CHECK(got.value == truth.value);
        CHECK(validate_cut(d, got));
        // Each branch alone is exact on the union of D and its reverse.
        VertexCut sym = symmetric_vc(d), sym_r = symmetric_vc(d.reversed());
        CHECK(std::min(sym.value, sym_r.value) == truth.value);
      }
      CHECK(st.lopsided.invalid == 0);
      CHECK(st.symmetric.invalid == 0);
    }
    CHECK(counters().sparsified_invalid.load() == 0);
  }

  TEST_CASE("planted lopsided and symmetric instances") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      PlantedParams pp;
      pp.l = 2;
      pp.s = 3;
      pp.r = 12;
      pp.max_weight = 6;
      PlantedInstance lop = generate_planted(PlantedKind::Lopsided, pp, seed);
      VertexCut a = lopsided_vc(lop.digraph);
      CHECK(a.value == lop.planted.value);
      CHECK(vertex_connectivity_weighted(lop.digraph).value == lop.planted.value);
      pp.l = 4;
      pp.r = 6;
      PlantedInstance sym = generate_planted(PlantedKind::Symmetric, pp, seed);
      CHECK(vertex_connectivity_weighted(sym.digraph).value == sym.planted.value);
    }
  }

  TEST_CASE("jobs do not change the result") {
    auto d = gen::random_strong_digraph(13, 0.4, 7, 99);
    VertexCut a = vertex_connectivity_weighted(d);
    ScopedConfig guard;
    config().jobs = 3;
    VertexCut b = vertex_connectivity_weighted(d);
    CHECK(a.value == b.value);
    CHECK(a.S == b.S);
    CHECK(a.L == b.L);
  }
}
