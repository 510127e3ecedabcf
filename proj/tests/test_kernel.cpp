#include "doctest.h"
#include "vconn/config.hpp"
#include "vconn/generators.hpp"
#include "vconn/kernel.hpp"
#include "vconn/oracle.hpp"

using namespace vconn;

TEST_SUITE("kernel") {
  TEST_CASE("complete graph has one cluster") {
    KernelIndex idx = build_kernel_index(gen::complete(8), 1);
    REQUIRE(!idx.clusters.empty());
    CHECK(idx.clusters[0] == iota_set(8));
    for (int v = 0; v < 8; ++v) CHECK(!idx.index[v].empty());
  }

  TEST_CASE("large l gives one cluster per partition") {
    Graph g = gen::random_connected(25, 0.25, 3);
    KernelIndex idx = build_kernel_index(g, 1000);
    for (auto& cl : idx.clusters) CHECK(cl == idx.v_low);
  }

  TEST_CASE("clusters lie in the low-degree set") {
    Graph g = gen::star(12);
    KernelIndex idx = build_kernel_index(g, 2);
    // delta = 1, so the center (degree 12) is excluded at c_low = 8.
    CHECK(!set_contains(idx.v_low, 0));
    for (auto& cl : idx.clusters) CHECK(set_minus(cl, idx.v_low).empty());
  }

  TEST_CASE("empty kernel when the cluster sits inside N[t]") {
    KernelIndex idx = build_kernel_index(gen::complete(6), 1);
    CHECK_THROWS_AS(kernel_graph(idx, 0, 0, 1), EmptyKernel);
    CHECK(query_kappa_upper(idx, 0, 1) == 6);
  }

  TEST_CASE("kernel separators bound kappa(s, t) from above") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph g = gen::random_connected(18, 0.25, seed);
      for (int l : {1, 2, 4}) {
        KernelIndex idx = build_kernel_index(g, l);
        for (int s = 0; s < g.n(); ++s)
          for (int t = 0; t < g.n(); ++t) {
            if (s == t) continue;
            KernelQuery q = query_kernel(idx, s, t);
            PairKappa truth = brute_pair_kappa(g, s, t);
            if (truth.separable) CHECK(q.value >= truth.value);
            if (q.cluster >= 0) {
              CHECK(validate_cut(g, q.cut));
              CHECK(!q.cut.L.empty());
              CHECK(!q.cut.R.empty());
              CHECK(q.cut.value <= q.value);
            }
            for (int i : idx.index[s]) {
              try {
                Kernel k = kernel_graph(idx, i, s, t);
                Separator sep = min_st_separator(k.graph, k.s, k.t);
                if (sep.exists && truth.separable) CHECK(sep.value >= truth.value);
              } catch (const EmptyKernel&) {
              }
            }
          }
      }
    }
  }

  TEST_CASE("planted unbalanced instances: cover and exact kernel value") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      PlantedParams p;
      p.l = 2;
      p.s = 4;
      p.r = 16;
      PlantedInstance inst = generate_planted(PlantedKind::Unbalanced, p, seed);
      const Graph& g = inst.graph;
      const VertexCut& cut = inst.planted;
      const int kappa = static_cast<int>(cut.value);
      int l = 1;
      while (l < static_cast<int>(cut.L.size())) l *= 2;
      KernelIndex idx = build_kernel_index(g, l);
      int home = -1;
      for (int i = 0; i < static_cast<int>(idx.clusters.size()); ++i)
        if (set_minus(cut.L, idx.clusters[i]).empty()) home = i;
      REQUIRE_MESSAGE(home >= 0, "seed=" << seed);
      // Cluster-size dichotomy, with a generous constant.
      const int lg = log2n(g.n());
      const auto& vi = idx.clusters[home];
      bool small = static_cast<int>(vi.size()) <= 16 * kappa * lg;
      bool thin = static_cast<int>(set_intersection(vi, cut.S).size()) <= 16 * static_cast<int>(cut.L.size()) * lg;
      CHECK((small || thin));
      for (int s : cut.L)
        for (int t : cut.R) {
          Kernel k = kernel_graph(idx, home, s, t);
          Separator sep = min_st_separator(k.graph, k.s, k.t);
          REQUIRE(sep.exists);
          CHECK(sep.value == kappa);
        }
      int s = cut.L.front(), t = cut.R.front();
      CHECK(query_kappa_upper(idx, s, t) == kappa);
    }
  }
}
