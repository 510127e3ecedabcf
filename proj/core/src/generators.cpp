#include "vconn/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace vconn::gen {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges_dedup(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph grid(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  return Graph::from_edges(rows * cols, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

Graph cliques_sharing(int clique, int shared) {
  const int n = 2 * clique - shared;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) e.emplace_back(u, v);
  const int off = clique - shared;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) e.emplace_back(off + u, off + v);
  return Graph::from_edges_dedup(n, e);
}

Graph complete_minus_matching(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u % 2 == 0 && v == u + 1)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(rng() % i);
    e.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges_dedup(n, e);
}

Graph random_min_degree(int n, double p, int min_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g = random_connected(n, p, rng());
  auto e = g.edges();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : e) adj[u][v] = adj[v][u] = 1;
  min_degree = std::min(min_degree, n - 1);
  for (int u = 0; u < n; ++u) {
    int guard = 0;
    while (deg[u] < min_degree && guard++ < 8 * n) {
      int v = static_cast<int>(rng() % n);
      if (v == u || adj[u][v]) continue;
      adj[u][v] = adj[v][u] = 1;
      ++deg[u];
      ++deg[v];
      e.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph::from_edges_dedup(n, e);
}

WeightedDigraph random_strong_digraph(int n, double p, Weight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> wd(1, std::max<Weight>(1, max_weight));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n && n > 1; ++i) {
    int u = order[i], v = order[(i + 1) % n];
    if (!has[u][v]) {
      has[u][v] = 1;
      arcs.emplace_back(u, v);
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !has[u][v] && coin(rng)) {
        has[u][v] = 1;
        arcs.emplace_back(u, v);
      }
  std::vector<Weight> w(n);
  for (auto& x : w) x = wd(rng);
  return WeightedDigraph::from_arcs(n, arcs, w);
}

WeightedDigraph weighted_cycle(const std::vector<Weight>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return WeightedDigraph::from_arcs(n, arcs, weights);
}

}  // namespace vconn::gen
