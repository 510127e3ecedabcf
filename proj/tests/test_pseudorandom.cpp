#include <cmath>
#include <random>

#include "doctest.h"
#include "vconn/config.hpp"
#include "vconn/oracle.hpp"
#include "vconn/pseudorandom.hpp"

using namespace vconn;

TEST_SUITE("pseudorandom") {
  TEST_CASE("disperser with k = n is complete bipartite") {
    LeftRegularBipartite b = build_disperser(5, 5, 3, 0.25);
    CHECK(b.right == 3);
    CHECK(check_disperser_exhaustive(b, 5, 0.0).verdict);
  }

  TEST_CASE("disperser at n = 12, k = 4 passes exhaustive verification") {
    LeftRegularBipartite b = build_disperser(12, 4, 4, 1.0 / 8);
    CheckResult c = check_disperser_exhaustive(b, 4, 1.0 / 8);
    CHECK(c.decided);
    CHECK(c.verdict);
    CHECK(b.degree >= 4);
    for (int v : b.table) CHECK((v >= 0 && v < b.right));
  }

  TEST_CASE("full coverage with a large right side is impossible") {
    CHECK_THROWS_AS(build_disperser(12, 4, 2, 0.0, 9), ConstructionFailed);
  }

  TEST_CASE("small dispersers verify exhaustively") {
    for (int n = 4; n <= 12; ++n)
      for (int k = 1; k <= std::min(5, n - 1); ++k)
        for (int d : {1, 3, 8}) {
          LeftRegularBipartite b = build_disperser(n, k, d, 0.25);
          CheckResult c = check_disperser_exhaustive(b, k, 0.25);
          CHECK_MESSAGE(c.verdict, "n=" << n << " k=" << k << " d=" << d);
        }
  }

  TEST_CASE("degree amplification keeps the disperser property") {
    LeftRegularBipartite b = build_disperser(10, 3, 16, 1.0 / 8);
    CHECK(b.degree >= 16);
    CHECK(check_disperser_exhaustive(b, 3, 1.0 / 8).verdict);
    CHECK(b.right >= 1);
  }

  TEST_CASE("constructions are deterministic") {
    CHECK(build_disperser(11, 3, 5, 0.125).table == build_disperser(11, 3, 5, 0.125).table);
    VertexSet A = iota_set(10);
    CHECK(asymmetric_crossing_family(A, A, 2, 5).pairs() == asymmetric_crossing_family(A, A, 2, 5).pairs());
    CHECK(build_selector(9, 2, 0.5).sets == build_selector(9, 2, 0.5).sets);
  }

  TEST_CASE("asymmetric crossing families") {
    VertexSet A{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    VertexSet B{10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
    PairFamily single = asymmetric_crossing_family(A, B, 10, 10);
    CHECK(single.size() == 1);
    CHECK(check_crossing_family(single, A, B, 10, 10).verdict);
    for (auto [l, r] : std::vector<std::pair<int, int>>{{2, 5}, {2, 8}, {1, 1}, {3, 4}, {5, 5}, {1, 9}, {4, 9}}) {
      PairFamily p = asymmetric_crossing_family(A, B, l, r);
      CheckResult c = check_crossing_family(p, A, B, l, r);
      CHECK_MESSAGE(c.verdict, "l=" << l << " r=" << r << " " << c.counterexample);
      CHECK(c.method == "exhaustive");
      CHECK(p.max_degree() <= p.declared_degree_bound);
    }
  }

  TEST_CASE("symmetric crossing families") {
    for (int n : {3, 5, 7, 9, 11, 12})
      for (double alpha : {1.0, 2.0, 3.0}) {
        PairFamily p = symmetric_crossing_family(n, alpha);
        CheckResult c = check_symmetric_crossing_family(p, n, alpha);
        CHECK_MESSAGE(c.verdict, "n=" << n << " alpha=" << alpha << " " << c.counterexample);
        for (auto [u, v] : p.pairs()) CHECK(u != v);
      }
    PairFamily full = symmetric_crossing_family(6, 10);
    CHECK(full.size() == 30);
  }

  TEST_CASE("selectors") {
    SubsetFamily f = build_selector(8, 2, 0.5);
    CHECK(check_selector(f, 8, 2, 0.5).verdict);
    for (auto& u : f.sets) CHECK(u.size() >= 2);
    for (int n = 3; n <= 10; ++n)
      for (int k = 1; k <= 3; ++k)
        for (double eps : {0.25, 0.5}) {
          if (n <= 2 * k) {
            CHECK_THROWS_AS(build_selector(n, k, eps), ConstructionFailed);
            continue;
          }
          SubsetFamily s = build_selector(n, k, eps);
          CHECK(check_selector(s, n, k, eps).verdict);
        }
  }

  TEST_CASE("selector from the expander backend") {
    ScopedConfig guard;
    config().selector_backend = "expander";
    SubsetFamily f = build_selector(64, 1, 0.5);
    CHECK(f.backend == "expander");
    for (auto& u : f.sets) CHECK(u.size() >= 2);
    // Sampled selection property on the full ground set.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
      int a = static_cast<int>(rng() % 64), b = static_cast<int>(rng() % 64);
      if (a == b) continue;
      bool found = false;
      for (auto& u : f.sets)
        if (set_contains(u, a) && !set_contains(u, b)) found = true;
      CHECK(found);
    }
    CHECK_THROWS_AS(build_selector(10, 1, 0.25), ConstructionFailed);
  }

  TEST_CASE("unique-neighbor expansion checker") {
    LeftRegularBipartite matching{6, 6, 1, {0, 1, 2, 3, 4, 5}};
    CHECK(check_unique_neighbor_expansion(matching, 6, 1.0));
    LeftRegularBipartite full{4, 3, 3, {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2}};
    CHECK(!check_unique_neighbor_expansion(full, 2, 0.6));
    LeftRegularBipartite e = build_unique_neighbor_expander(16, 3, 0.75);
    CHECK(e.degree == 8);
    CHECK(check_unique_neighbor_expansion(e, 3, 0.75));
    CHECK_THROWS_AS(build_unique_neighbor_expander(8, 5, 0.75), ConstructionFailed);
  }

  TEST_CASE("mixing graphs") {
    MixingGraph k = build_mixing_graph(7, 6);
    CHECK(k.complete);
    CHECK(k.guarantees_edge(1, 1));
    MixingGraph m = build_mixing_graph(64, 8);
    CHECK(m.graph.n() == 64);
    for (int v = 0; v < 64; ++v) CHECK(m.graph.degree(v) == m.degree);
    CHECK(m.degree <= 4 * 8);
    CHECK(m.lambda < 1.0);
    CHECK(std::abs(dense_lambda(m.graph) - m.lambda) < 1e-6);
    CHECK(power_iteration_lambda(m.graph, 3000, 1) <= m.lambda + 1e-3);
    CHECK(power_iteration_lambda(m.graph, 3000, 1) >= m.lambda - 0.05);
    // Expander mixing inequality on random set pairs.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
      std::vector<char> in_s(64), in_t(64);
      for (int v = 0; v < 64; ++v) {
        in_s[v] = rng() % 3 == 0;
        in_t[v] = rng() % 3 == 0;
      }
      double s = 0, tt = 0, e = 0;
      for (int v = 0; v < 64; ++v) {
        s += in_s[v];
        tt += in_t[v];
        if (in_s[v])
          for (int w : m.graph.adj(v)) e += in_t[w];
      }
      CHECK(std::abs(e - s * tt * m.degree / 64) <= m.lambda * m.degree * std::sqrt(s * tt) + 1e-6);
    }
    // Disjoint sets above the threshold always see an edge.
    int a = 1;
    while (!m.guarantees_edge(a, a)) ++a;
    for (int t = 0; t < 1000; ++t) {
      std::vector<int> perm(64);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<char> in_a(64, 0);
      for (int i = 0; i < a; ++i) in_a[perm[i]] = 1;
      bool edge = false;
      for (int i = a; i < 2 * a && !edge; ++i)
        for (int w : m.graph.adj(perm[i])) edge |= in_a[w] == 1;
      CHECK(edge);
    }
  }

  TEST_CASE("odd degree on an odd vertex count rounds up") {
    MixingGraph m = build_mixing_graph(21, 5);
    for (int v = 0; v < 21; ++v) CHECK(m.graph.degree(v) == 6);
  }
}
