#include <cmath>
#include <random>

#include "doctest.h"
#include "vconn/config.hpp"
#include "vconn/gabow.hpp"
#include "vconn/generators.hpp"
#include "vconn/oracle.hpp"

using namespace vconn;

TEST_SUITE("gabow") {
  TEST_CASE("rich_set_or_cut branches") {
    // delta > n/2 returns V.
    Graph dense = gen::complete_minus_matching(10);
    RichOrCut r = rich_set_or_cut(dense, 3);
    CHECK_FALSE(r.is_cut);
    CHECK(r.branch == "dense");
    CHECK(r.rich.T == iota_set(10));

    Graph two = gen::cliques_sharing(6, 2);
    RichOrCut c = rich_set_or_cut(two, 3);
    REQUIRE(c.is_cut);
    CHECK(c.cut.value == 2);
    CHECK(validate_cut(two, c.cut));
  }

  TEST_CASE("rich sets meet both sides of the planted cut") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      PlantedParams pp;
      pp.l = 6;
      pp.s = 3;
      pp.r = 9;
      pp.density = 0.9;
      PlantedInstance inst = generate_planted(PlantedKind::BalancedTerminal, pp, seed);
      const Graph& g = inst.graph;
      const int k = static_cast<int>(inst.planted.value) + 1;
      RichOrCut r = rich_set_or_cut(g, k);
      if (r.is_cut) {
        CHECK(r.cut.value < k);
        CHECK(validate_cut(g, r.cut));
        continue;
      }
      if (r.rich.tau < 1) continue;
      // Some minimum cut is tau-rich; the planted one is the unique candidate here.
      VertexCut truth = brute_kappa(g);
      CHECK(truth.value == inst.planted.value);
      const auto on_l = set_intersection(r.rich.T, inst.planted.L).size();
      const auto on_r = set_intersection(r.rich.T, inst.planted.R).size();
      INFO("seed " << seed << " branch " << r.branch);
      CHECK(std::min(on_l, on_r) >= static_cast<size_t>(r.rich.tau));
    }
  }

  TEST_CASE("increase_gap keeps the best cut valid and the graph no larger") {
    Graph g = gen::complete_minus_matching(8);
    GapState s = initial_gap_state(g);
    CHECK(s.best.value == 6);
    GapState t = increase_gap(s, 7);
    CHECK(t.removed == VertexSet{0});
    CHECK(t.h.n() == 7);
    CHECK(t.h.m() <= s.h.m());
    CHECK(t.best.value <= s.best.value);
    CHECK(validate_cut(g, t.best));
    for (int v = 0; v < t.h.n(); ++v) CHECK(t.h.degree(v) >= g.min_degree() - 1);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph r = gen::random_min_degree(16, 0.3, 5, seed);
      GapState st = initial_gap_state(r);
      for (int i = 0; i < 3; ++i) {
        GapState nx;
        try {
          nx = increase_gap(st, 6);
        } catch (const Exhausted&) {
          break;
        }
        CHECK(nx.h.m() <= st.h.m());
        CHECK(nx.best.value <= st.best.value);
        CHECK(validate_cut(r, nx.best));
        st = std::move(nx);
      }
    }
    CHECK_THROWS_AS(increase_gap(initial_gap_state(gen::complete(5)), 3), Exhausted);
  }

  TEST_CASE("large_gap_vc on named graphs") {
    GabowResult c8 = large_gap_vc(gen::cycle(8), 3, 0);
    REQUIRE_FALSE(c8.k_connected);
    CHECK(c8.cut.value == 2);
    CHECK(large_gap_vc(gen::complete(8), 3, 0).k_connected);
  }

  TEST_CASE("gabow_vc on named graphs") {
    GabowResult p4 = gabow_vc(gen::petersen(), 4);
    REQUIRE_FALSE(p4.k_connected);
    CHECK(p4.cut.value == 3);
    CHECK(gabow_vc(gen::petersen(), 3).k_connected);
    Graph disc = Graph::from_edges(4, {{0, 1}, {2, 3}});
    GabowResult d = gabow_vc(disc, 1);
    REQUIRE_FALSE(d.k_connected);
    CHECK(d.cut.S.empty());
    CHECK(gabow_vc(gen::complete(6), 5).k_connected);
    CHECK_FALSE(gabow_vc(gen::complete(6), 6).k_connected);
  }

  TEST_CASE("gabow_vc decisions match the oracle") {
    int cases = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = 8 + static_cast<int>(rng() % 25);
      const double p = 0.1 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
      Graph g = gen::random_connected(n, p, seed);
      VertexCut truth = brute_kappa(g);
      for (int k = 1; k <= 8; k += 3) {
        GabowResult r = gabow_vc(g, k);
        INFO("seed " << seed << " n " << n << " k " << k << " kappa " << truth.value);
        CHECK(r.k_connected == (truth.value >= k));
        if (!r.k_connected) {
          CHECK(r.cut.value == truth.value);
          CHECK(validate_cut(g, r.cut));
        }
        ++cases;
      }
    }
    CHECK(cases == 90);
  }

  TEST_CASE("gap enlargement path with k >= sqrt(n)") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Graph g = gen::random_min_degree(14, 0.55, 6, seed);
      VertexCut truth = brute_kappa(g);
      const int k = 6;
      GabowResult r = gabow_decide(g, k);
      CHECK(r.k_connected == (truth.value >= k));
      if (!r.k_connected) {
        CHECK(r.cut.value < k);
        CHECK(validate_cut(g, r.cut));
      }
    }
  }
}
