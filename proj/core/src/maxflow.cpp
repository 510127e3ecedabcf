#include "vconn/maxflow.hpp"

#include <limits>

#include "vconn/instrumentation.hpp"

namespace vconn {

namespace {

// Blocking-flow max flow over a forward-star residual network.
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(static_cast<size_t>(nodes), -1), level_(nodes), it_(nodes) {}

  void add_arc(int u, int v, Weight cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(0);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  Weight run(int s, int t, bool unit) {
    Weight flow = 0;
    while (bfs(s, t)) {
      for (size_t i = 0; i < head_.size(); ++i) it_[i] = head_[i];
      while (Weight f = dfs(s, t, unit ? 1 : std::numeric_limits<Weight>::max())) flow += f;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
    }
    return seen;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int u = q[qi];
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push_back(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  // Iterative DFS along the level graph; returns the bottleneck pushed.
  Weight dfs(int s, int t, Weight limit) {
    std::vector<int> path;
    int u = s;
    while (true) {
      if (u == t) {
        Weight f = limit;
        for (int e : path) f = std::min(f, cap_[e]);
        for (int e : path) {
          cap_[e] -= f;
          cap_[e ^ 1] += f;
        }
        return f;
      }
      int& e = it_[u];
      while (e >= 0 && !(cap_[e] > 0 && level_[to_[e]] == level_[u] + 1)) e = next_[e];
      if (e >= 0) {
        path.push_back(e);
        u = to_[e];
        continue;
      }
      // Dead end: retreat.
      level_[u] = -1;
      if (path.empty()) return 0;
      int back = path.back();
      path.pop_back();
      u = to_[back ^ 1];
      it_[u] = next_[it_[u]];
    }
  }

  std::vector<int> head_, next_, to_;
  std::vector<Weight> cap_;
  std::vector<int> level_, it_;
};

}  // namespace

FlowGraphView flow_view(const Graph& g) {
  FlowGraphView v;
  v.n = g.n();
  v.edges = g.m();
  v.out = [&g](int u) { return g.adj(u); };
  v.capacity = [](int) { return Weight{1}; };
  v.unit = true;
  return v;
}

FlowGraphView flow_view(const WeightedDigraph& d) {
  FlowGraphView v;
  v.n = d.n();
  v.edges = d.m();
  v.out = [&d](int u) { return d.out(u); };
  v.capacity = [&d](int u) { return d.weight(u); };
  v.unit = d.max_weight() == 1;
  return v;
}

Separator min_vertex_separator(const FlowGraphView& g, const VertexSet& sources,
                               const VertexSet& sinks) {
  int n = g.n;
  std::vector<char> role(static_cast<size_t>(n), 0);  // 1 source, 2 sink
  for (int s : sources) role[s] = 1;
  for (int t : sinks) {
    if (role[t] == 1) throw InvariantError("source and sink sets intersect");
    role[t] = 2;
  }
  for (int s : sources)
    for (int w : g.out(s))
      if (role[w] == 2) return Separator{};
  counters().flow_calls++;
  counters().flow_instance_edges += static_cast<std::uint64_t>(g.edges);

  Weight total = 1;
  for (int v = 0; v < n; ++v)
    if (role[v] == 0) total += g.capacity(v);
  const Weight inf = total;
  int src = 2 * n, snk = 2 * n + 1;
  Dinic net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    net.add_arc(2 * v, 2 * v + 1, role[v] == 0 ? g.capacity(v) : inf);
    for (int w : g.out(v)) net.add_arc(2 * v + 1, 2 * w, inf);
  }
  for (int s : sources) net.add_arc(src, 2 * s + 1, inf);
  for (int t : sinks) net.add_arc(2 * t, snk, inf);
  Weight flow = net.run(src, snk, g.unit);
  if (flow >= inf) return Separator{};
  auto seen = net.reachable(src);
  Separator out;
  out.exists = true;
  out.value = flow;
  Weight check = 0;
  for (int v = 0; v < n; ++v)
    if (role[v] == 0 && seen[2 * v] && !seen[2 * v + 1]) {
      out.vertices.push_back(v);
      check += g.capacity(v);
    }
  if (check != flow) throw InvariantError("max-flow value differs from separator weight");
  return out;
}

Separator min_st_separator(const Graph& g, int s, int t) {
  if (s == t) throw InvariantError("min_st_separator requires s != t");
  return min_vertex_separator(flow_view(g), {s}, {t});
}

Separator min_st_separator(const WeightedDigraph& d, int s, int t) {
  if (s == t) throw InvariantError("min_st_separator requires s != t");
  return min_vertex_separator(flow_view(d), {s}, {t});
}

Separator min_s_to_set_separator(const Graph& g, int s, const VertexSet& T) {
  if (set_contains(T, s)) throw InvariantError("s must not belong to T");
  if (T.empty()) throw InvariantError("T must be nonempty");
  return min_vertex_separator(flow_view(g), {s}, T);
}

Separator min_set_separator(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
  return min_vertex_separator(flow_view(g), sources, sinks);
}

RootedResult rooted_connectivity(const Graph& g, int a) {
  RootedResult best;
  best.cut = VertexCut::none(g.n() - 1);
  best.value = g.n() - 1;
  for (int t = 0; t < g.n(); ++t) {
    if (t == a || g.adjacent(a, t)) continue;
    Separator sep = min_st_separator(g, a, t);
    if (!sep.exists) continue;
    VertexCut c = cut_from_separator(g, sep.vertices, a);
    if (cut_less(c, best.cut)) {
      best.cut = std::move(c);
      best.value = sep.value;
    }
  }
  return best;
}

RootedResult weak_separator(const Graph& g, const VertexSet& T) {
  int n = g.n();
  if (T.empty() || static_cast<int>(T.size()) >= n)
    throw InvariantError("weak_separator requires a nonempty proper terminal set");
  // G_T: vertex n joined to all of T.
  std::vector<std::vector<int>> extra(static_cast<size_t>(n) + 1);
  std::vector<char> inT(static_cast<size_t>(n), 0);
  for (int v : T) inT[v] = 1;
  for (int v = 0; v < n; ++v) {
    extra[v].assign(g.adj(v).begin(), g.adj(v).end());
    if (inT[v]) extra[v].push_back(n);
  }
  extra[n] = T;
  FlowGraphView view;
  view.n = n + 1;
  view.edges = g.m() + static_cast<std::int64_t>(T.size());
  view.out = [&extra](int u) { return std::span<const int>(extra[u]); };
  view.capacity = [](int) { return Weight{1}; };
  view.unit = true;

  // Cut of G from a separator of x and the new vertex: R = x's side, L = the
  // original vertices left on the new vertex's side.
  auto make_cut = [&](int x, const Separator& sep) {
    std::vector<char> mark(static_cast<size_t>(n) + 1, 0);
    for (int v : sep.vertices) mark[v] = 2;
    std::vector<int> stack{x};
    mark[x] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : extra[v])
        if (!mark[w]) {
          mark[w] = 1;
          stack.push_back(w);
        }
    }
    VertexCut c;
    for (int v = 0; v < n; ++v) {
      if (mark[v] == 2) c.S.push_back(v);
      else if (mark[v] == 1) c.R.push_back(v);
      else c.L.push_back(v);
    }
    c.value = static_cast<Weight>(c.S.size());
    return c;
  };

  RootedResult best;
  best.cut = VertexCut::none(n - 1);
  const Weight t_size = static_cast<Weight>(T.size());
  std::vector<int> degenerate;
  for (int x = 0; x < n; ++x) {
    if (inT[x]) continue;
    // Only a separator equal to T can leave the new vertex alone on its side,
    // so the plain flow is conclusive below |T|.
    Separator sep = min_vertex_separator(view, {x}, {n});
    if (!sep.exists) continue;
    if (sep.value < t_size) {
      keep_better(best.cut, make_cut(x, sep));
      continue;
    }
    VertexCut plain = make_cut(x, sep);
    if (!plain.L.empty()) {
      keep_better(best.cut, plain);
      continue;
    }
    degenerate.push_back(x);
    // Force each terminal in turn to stay on the far side.
    for (int y : T) {
      if (g.adjacent(x, y)) continue;
      Separator sy = min_vertex_separator(view, {x}, {y, n});
      if (!sy.exists) continue;
      VertexCut c = make_cut(x, sy);
      if (!c.L.empty()) keep_better(best.cut, c);
    }
  }
  // Remaining case: all of T in the separator and the far side free of T.
  // Such cuts cost |T| plus a separator of G - T.
  if (!degenerate.empty() && (best.cut.no_cut || best.cut.value > t_size + 1)) {
    VertexSet rest = complement(n, T);
    Graph h = g.induced(rest);
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) local[rest[i]] = i;
    for (int x : degenerate) {
      RootedResult r = rooted_connectivity(h, local[x]);
      if (r.cut.no_cut) continue;
      VertexSet S = T;
      for (int v : r.cut.S) S.push_back(rest[v]);
      std::sort(S.begin(), S.end());
      VertexCut c = cut_from_separator(g, S, x);
      c.value = static_cast<Weight>(c.S.size());
      if (!c.R.empty()) keep_better(best.cut, c);
    }
  }
  best.value = best.cut.value;
  return best;
}

}  // namespace vconn
