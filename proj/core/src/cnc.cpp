#include "vconn/cnc.hpp"

#include <algorithm>
#include <deque>

#include "vconn/instrumentation.hpp"

namespace vconn {

void Clustering::rebuild_index() {
  clusters.clear();
  partition_of.clear();
  membership.assign(n, {});
  for (int p = 0; p < static_cast<int>(partitions.size()); ++p)
    for (auto& c : partitions[p]) {
      int id = static_cast<int>(clusters.size());
      clusters.push_back(c);
      partition_of.push_back(p);
      for (int v : c) membership[v].push_back(id);
    }
}

namespace {

struct Aux {
  std::vector<std::vector<int>> adj;
};

Aux build_aux(const Graph& g, const DistanceOracle& dist, std::int64_t d, CandidateEdges cand,
              std::int64_t& calls) {
  Aux a;
  const int n = g.n();
  a.adj.assign(n, {});
  if (cand == CandidateEdges::GraphEdges) {
    for (int u = 0; u < n; ++u)
      for (int v : g.adj(u))
        if (u < v) {
          ++calls;
          if (dist(u, v) <= d) {
            a.adj[u].push_back(v);
            a.adj[v].push_back(u);
          }
        }
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        ++calls;
        if (dist(u, v) <= d) {
          a.adj[u].push_back(v);
          a.adj[v].push_back(u);
        }
      }
  }
  for (auto& l : a.adj) std::sort(l.begin(), l.end());
  return a;
}

}  // namespace

Clustering cnc(const Graph& g, const DistanceOracle& dist, std::int64_t d, CandidateEdges candidates,
               CncStats* stats) {
  const int n = g.n();
  CncStats local;
  Aux aux = build_aux(g, dist, d, candidates, local.oracle_calls);

  Clustering out;
  out.n = n;
  std::vector<char> in_u(n, 1), in_rem(n, 0), in_tree(n, 0), seen(n, 0);
  std::vector<std::int64_t> root_dist(n, -1);
  int u_size = n;

  // BFS from root over the auxiliary graph restricted to U_rem, admitting v
  // only when dist(root, v) <= radius.
  auto ball = [&](int root, std::int64_t radius) {
    VertexSet t;
    std::deque<int> q{root};
    seen[root] = 1;
    t.push_back(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : aux.adj[x]) {
        if (!in_rem[y] || seen[y]) continue;
        if (root_dist[y] < 0) {
          root_dist[y] = dist(root, y);
          ++local.oracle_calls;
        }
        if (root_dist[y] > radius) continue;
        seen[y] = 1;
        t.push_back(y);
        q.push_back(y);
      }
    }
    for (int v : t) seen[v] = 0;
    std::sort(t.begin(), t.end());
    return t;
  };
  auto boundary = [&](const VertexSet& t) {
    for (int v : t) in_tree[v] = 1;
    std::int64_t cnt = 0;
    std::vector<int> marked;
    for (int v : t)
      for (int y : aux.adj[v])
        if (in_rem[y] && !in_tree[y] && !seen[y]) {
          seen[y] = 1;
          marked.push_back(y);
          ++cnt;
        }
    for (int y : marked) seen[y] = 0;
    for (int v : t) in_tree[v] = 0;
    return cnt;
  };

  while (u_size > 0) {
    std::vector<VertexSet> part;
    std::vector<char> next(n, 0);
    int rem_size = 0;
    for (int v = 0; v < n; ++v) {
      in_rem[v] = in_u[v];
      rem_size += in_u[v];
    }
    int cursor = 0;
    while (rem_size > 0) {
      while (!in_rem[cursor]) ++cursor;
      const int root = cursor;
      std::vector<int> touched;
      VertexSet prev;          // T_{i-1}
      VertexSet cur{root};     // T_i
      int i = 1;
      root_dist[root] = 0;
      while (true) {
        std::int64_t nb = boundary(cur);
        std::int64_t ps = static_cast<std::int64_t>(prev.size());
        std::int64_t cs = static_cast<std::int64_t>(cur.size());
        if (!(nb >= ps || 10 * cs >= 11 * ps)) break;
        // Only reachable with a degenerate oracle (no triangle inequality at d = 0).
        if (i > 4 * n + 8) break;
        ++i;
        prev = std::move(cur);
        cur = ball(root, 5LL * i * d);
      }
      local.max_radius_index = std::max(local.max_radius_index, i);
      VertexSet tree = ball(root, (5LL * i - 3) * d);
      for (int v : tree) {
        in_rem[v] = 0;
        --rem_size;
      }
      for (int v : set_minus(cur, prev)) next[v] = 1;
      part.push_back(std::move(tree));
      for (int v = 0; v < n; ++v) root_dist[v] = -1;
    }
    // Vertices outside U join as singletons so each partition covers V.
    for (int v = 0; v < n; ++v)
      if (!in_u[v]) part.push_back({v});
    std::sort(part.begin(), part.end());
    out.partitions.push_back(std::move(part));
    u_size = 0;
    for (int v = 0; v < n; ++v) {
      in_u[v] = next[v];
      u_size += next[v];
    }
  }
  out.rebuild_index();
  std::uint64_t members = 0;
  for (auto& c : out.clusters) members += c.size();
  counters().cluster_memberships += members;
  if (stats) *stats = local;
  return out;
}

Clustering weighted_cnc(const WeightedDigraph& dg, Weight l) {
  Graph empty(dg.n());
  DistanceOracle dist = [&dg](int u, int v) { return weighted_symdiff(dg, u, v); };
  return cnc(empty, dist, 2 * std::max<Weight>(l, 0), CandidateEdges::AllPairs);
}

}  // namespace vconn
