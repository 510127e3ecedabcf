#include <random>

#include "doctest.h"
#include "vconn/cnc.hpp"
#include "vconn/config.hpp"
#include "vconn/generators.hpp"
#include "vconn/oracle.hpp"

using namespace vconn;

namespace {

DistanceOracle symdiff_oracle(const Graph& g) {
  return [&g](int u, int v) { return static_cast<std::int64_t>(symdiff_size(g, u, v)); };
}

void check_partitions_exact(const Clustering& c) {
  for (auto& part : c.partitions) {
    std::vector<int> seen(c.n, 0);
    for (auto& cl : part)
      for (int v : cl) ++seen[v];
    for (int v = 0; v < c.n; ++v) CHECK(seen[v] == 1);
  }
  for (int v = 0; v < c.n; ++v) CHECK(c.membership[v].size() == c.partitions.size());
}

}  // namespace

TEST_SUITE("cnc") {
  TEST_CASE("complete graph gives one cluster") {
    Graph k = gen::complete(9);
    Clustering c = cnc(k, symdiff_oracle(k), 2, CandidateEdges::GraphEdges);
    REQUIRE(!c.partitions.empty());
    CHECK(c.partitions[0].size() == 1);
    CHECK(c.partitions[0][0] == iota_set(9));
    check_partitions_exact(c);
  }

  TEST_CASE("large d gives one partition") {
    Graph g = gen::random_connected(30, 0.15, 4);
    Clustering c = cnc(g, symdiff_oracle(g), 1000, CandidateEdges::AllPairs);
    CHECK(c.partitions.size() == 1);
    CHECK(c.partitions[0].size() == 1);
  }

  TEST_CASE("cliques joined by a path") {
    // Two K6 on [0,6) and [6,12) joined by the path 5-12-13-6.
    std::vector<std::pair<int, int>> e;
    for (int b : {0, 6})
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) e.emplace_back(b + i, b + j);
    e.emplace_back(5, 12);
    e.emplace_back(12, 13);
    e.emplace_back(13, 6);
    Graph g = Graph::from_edges(14, e);
    Clustering c = cnc(g, symdiff_oracle(g), 2, CandidateEdges::GraphEdges);
    check_partitions_exact(c);
    auto covered = [&](const VertexSet& s) {
      for (auto& cl : c.clusters)
        if (set_minus(s, cl).empty()) return true;
      return false;
    };
    CHECK(covered({0, 1, 2, 3, 4}));
    CHECK(covered({7, 8, 9, 10, 11}));
    ClusteringReport r = check_clustering(g, c, symdiff_oracle(g), 2, CandidateEdges::GraphEdges,
                                          config().cnc_c1, config().cnc_c2, 200, 1);
    CHECK_MESSAGE(r.verdict, r.counterexample);
  }

  TEST_CASE("random graphs satisfy the cover properties") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      Graph g = gen::random_connected(40, 0.1 + 0.03 * static_cast<double>(seed % 5), seed);
      for (std::int64_t d : {1, 2, 4, 8}) {
        for (auto cand : {CandidateEdges::GraphEdges, CandidateEdges::AllPairs}) {
          CncStats st;
          Clustering c = cnc(g, symdiff_oracle(g), d, cand, &st);
          check_partitions_exact(c);
          ClusteringReport r = check_clustering(g, c, symdiff_oracle(g), d, cand, config().cnc_c1,
                                                config().cnc_c2, 100, seed);
          CHECK_MESSAGE(r.verdict, "seed=" << seed << " d=" << d << " " << r.counterexample);
          CHECK(st.max_radius_index >= 1);
        }
      }
    }
  }

  TEST_CASE("cnc is deterministic") {
    Graph g = gen::random_connected(35, 0.2, 8);
    Clustering a = cnc(g, symdiff_oracle(g), 3, CandidateEdges::GraphEdges);
    Clustering b = cnc(g, symdiff_oracle(g), 3, CandidateEdges::GraphEdges);
    CHECK(a.partitions == b.partitions);
  }

  TEST_CASE("clustering checker reports a broken cover") {
    Graph k = gen::complete(6);
    Clustering bad;
    bad.n = 6;
    bad.partitions = {{{0, 1, 2}, {3, 4, 5}}};
    bad.rebuild_index();
    ClusteringReport r = check_clustering(k, bad, symdiff_oracle(k), 2, CandidateEdges::GraphEdges, 1, 170,
                                          100, 1);
    CHECK(!r.verdict);
    CHECK(r.cover_failures > 0);
  }

  TEST_CASE("weighted clustering") {
    WeightedDigraph k = WeightedDigraph::from_graph(gen::complete(7));
    Clustering c = weighted_cnc(k, 1);
    CHECK(c.clusters.front() == iota_set(7));
    // l = 0 merges only identical out-neighborhoods.
    WeightedDigraph d = gen::random_strong_digraph(12, 0.3, 5, 2);
    Clustering z = weighted_cnc(d, 0);
    check_partitions_exact(z);
    for (auto& cl : z.clusters)
      for (int u : cl)
        for (int v : cl) CHECK(weighted_symdiff(d, u, v) == 0);
  }

  TEST_CASE("weighted clustering covers planted small sides") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      PlantedParams p;
      p.l = 2;
      p.s = 3;
      p.r = 12;
      p.max_weight = 4;
      PlantedInstance inst = generate_planted(PlantedKind::Lopsided, p, seed);
      Weight l = inst.digraph.weight_of(inst.planted.L);
      Clustering c = weighted_cnc(inst.digraph, l);
      bool covered = false;
      for (auto& cl : c.clusters) covered |= set_minus(inst.planted.L, cl).empty();
      CHECK_MESSAGE(covered, "seed=" << seed);
    }
  }
}

TEST_SUITE("sketch") {
  TEST_CASE("identical vertices recover the empty set") {
    Graph g = gen::petersen();
    for (const char* b : {"reference", "syndrome"}) {
      auto s = sketch_construct(g, 4, b);
      auto r = sketch_recover(s[3], s[3]);
      REQUIRE(r.has_value());
      CHECK(r->empty());
    }
  }

  TEST_CASE("backends agree with the direct symmetric difference") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Graph g = gen::random_connected(30, 0.2, seed);
      for (std::int64_t x : {0, 2, 6, 12}) {
        auto ref = sketch_construct(g, x, "reference");
        auto syn = sketch_construct(g, x, "syndrome");
        for (int t = 0; t < 60; ++t) {
          int u = static_cast<int>(rng() % 30), v = static_cast<int>(rng() % 30);
          VertexSet direct;
          std::set_symmetric_difference(g.adj(u).begin(), g.adj(u).end(), g.adj(v).begin(),
                                        g.adj(v).end(), std::back_inserter(direct));
          auto a = sketch_recover(ref[u], ref[v]);
          REQUIRE(a.has_value());
          CHECK(*a == direct);
          auto b = sketch_recover(syn[u], syn[v]);
          if (static_cast<std::int64_t>(direct.size()) <= x) {
            REQUIRE(b.has_value());
            CHECK(*b == direct);
          } else {
            CHECK(!b.has_value());
          }
        }
      }
    }
  }

  TEST_CASE("mixing sketch families is rejected") {
    Graph g = gen::cycle(6);
    auto a = sketch_construct(g, 2, "reference");
    auto b = sketch_construct(g, 2, "reference");
    CHECK_THROWS_AS(sketch_recover(a[0], b[1]), MixedSketchError);
    CHECK_THROWS_AS(sketch_construct(g, 2, "bogus"), InvariantError);
  }
}
