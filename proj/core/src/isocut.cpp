#include "vconn/isocut.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/pseudorandom.hpp"

namespace vconn {

VertexSet greedy_independent_subset(const Graph& g, const VertexSet& x) {
  VertexSet out;
  std::vector<char> blocked(g.n(), 0);
  for (int v : x) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (int y : g.adj(v)) blocked[y] = 1;
  }
  return out;
}

IsolatingResult isolating_vertex_cuts(const Graph& g, const VertexSet& I) {
  if (I.size() < 2) throw InvariantError("isolating cuts need at least two terminals");
  for (size_t i = 0; i < I.size(); ++i)
    for (size_t j = i + 1; j < I.size(); ++j)
      if (g.adjacent(I[i], I[j])) throw InvariantError("isolating cuts need an independent set");
  const int n = g.n();
  const int t = static_cast<int>(I.size());
  IsolatingResult res;
  res.terminals = I;
  res.rounds = ceil_log2(t);

  // Bit-partition separators; their union splits the terminals apart.
  std::vector<char> removed(n, 0);
  for (int b = 0; b < res.rounds; ++b) {
    VertexSet zero, one;
    for (int i = 0; i < t; ++i) ((i >> b) & 1 ? one : zero).push_back(I[i]);
    Separator sep = min_set_separator(g, zero, one);
    res.instance_edges += g.m();
    for (int v : sep.vertices) removed[v] = 1;
  }

  // Region U_v = component of v in G minus the union; the local instance is
  // G[U_v + N(U_v)] with a sink joined to N(U_v).
  std::vector<int> region(n, -1);
  res.separators.resize(t);
  res.cuts.resize(t);
  for (int i = 0; i < t; ++i) {
    const int v = I[i];
    VertexSet u{v};
    region[v] = i;
    for (size_t qi = 0; qi < u.size(); ++qi)
      for (int y : g.adj(u[qi]))
        if (!removed[y] && region[y] < 0) {
          region[y] = i;
          u.push_back(y);
        }
    std::sort(u.begin(), u.end());
    VertexSet boundary = set_neighborhood(g, u);
    VertexSet verts = set_union(u, boundary);
    std::vector<int> local(n, -1);
    for (int j = 0; j < static_cast<int>(verts.size()); ++j) local[verts[j]] = j;
    const int sink = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int a : u)
      for (int y : g.adj(a))
        if (a < y || !set_contains(u, y)) edges.emplace_back(local[a], local[y]);
    for (int w : boundary) edges.emplace_back(local[w], sink);
    Graph h = Graph::from_edges_dedup(sink + 1, std::move(edges));
    res.instance_edges += h.m();
    Separator sep = min_st_separator(h, local[v], sink);
    VertexSet c;
    for (int x : sep.vertices) c.push_back(verts[x]);
    std::sort(c.begin(), c.end());
    res.separators[i] = c;
    res.cuts[i] = cut_from_separator(g, c, v);
  }
  return res;
}

namespace {

VertexSet map_ids(const VertexSet& local, const VertexSet& ids) {
  VertexSet out;
  out.reserve(local.size());
  for (int x : local) out.push_back(ids[x]);
  std::sort(out.begin(), out.end());
  return out;
}

// Accepts a cut of G only if it validates with both sides nonempty.
void offer(VertexCut& best, const Graph& g, VertexCut cut) {
  if (cut.L.empty() || cut.R.empty() || !validate_cut(g, cut)) {
    counters().invalid_intermediate_cuts++;
    return;
  }
  keep_better(best, cut);
}

// Branch selection shared by both algorithms: the selector branch runs while
// k / eps <= |T| / switch and the selector can be built.
std::optional<SubsetFamily> selector_for(int t, int k) {
  const double eps = config().terminal_eps;
  const double kk = std::ceil(k / eps);
  if (kk > t / config().terminal_switch) return std::nullopt;
  try {
    return build_selector(t, static_cast<int>(kk), eps);
  } catch (const ConstructionFailed& e) {
    note_fallback(std::string("selector unavailable, using crossing family: ") + e.what());
    return std::nullopt;
  }
}

// Graph on T + N(T) + {s}: edges with an endpoint in T, and s joined to N(T).
struct Auxiliary {
  Graph graph;
  VertexSet ids;  // local -> original for the first ids.size() vertices
  int super = -1;
  std::vector<int> local;
};

Auxiliary auxiliary_graph(const Graph& g, const VertexSet& T) {
  Auxiliary a;
  VertexSet nt = set_neighborhood(g, T);
  a.ids = set_union(T, nt);
  a.local.assign(g.n(), -1);
  for (int i = 0; i < static_cast<int>(a.ids.size()); ++i) a.local[a.ids[i]] = i;
  a.super = static_cast<int>(a.ids.size());
  std::vector<char> in_t(g.n(), 0);
  for (int v : T) in_t[v] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int v : T)
    for (int y : g.adj(v))
      if (!in_t[y] || v < y) edges.emplace_back(a.local[v], a.local[y]);
  for (int u : nt) edges.emplace_back(a.local[u], a.super);
  a.graph = Graph::from_edges_dedup(a.super + 1, std::move(edges));
  return a;
}

}  // namespace

VertexCut balanced_terminal_vc(const Graph& g, const VertexSet& T, int k) {
  const int n = g.n();
  if (g.is_complete()) return VertexCut::none(n - 1);
  if (!is_connected(g)) return disconnected_cut(g);
  VertexCut best = VertexCut::none(n);
  if (T.empty()) return best;
  const int t = static_cast<int>(T.size());
  std::optional<SubsetFamily> sel = selector_for(t, std::max(k, 1));
  if (sel) {
    const int count = static_cast<int>(sel->sets.size());
    std::vector<VertexCut> found(count, VertexCut::none(n));
    detail::parallel_for(count, [&](int j) {
      VertexSet x = map_ids(sel->sets[j], T);
      VertexSet I = greedy_independent_subset(g, x);
      if (I.size() < 2) return;
      IsolatingResult iso = isolating_vertex_cuts(g, I);
      for (auto& c : iso.cuts) offer(found[j], g, c);
    });
    for (auto& c : found) keep_better(best, c);
    return best;
  }
  PairFamily p = symmetric_crossing_family(t, 1.0 / config().terminal_eps);
  const auto& pairs = p.pairs();
  const int count = static_cast<int>(pairs.size());
  std::vector<VertexCut> found(count, VertexCut::none(n));
  detail::parallel_for(count, [&](int j) {
    int a = T[pairs[j].first], b = T[pairs[j].second];
    Separator sep = min_st_separator(g, a, b);
    if (sep.exists) offer(found[j], g, cut_from_separator(g, sep.vertices, a));
  });
  for (auto& c : found) keep_better(best, c);
  return best;
}

VertexCut subgraph_balanced_terminal_vc(const Graph& g, const VertexSet& T, int k) {
  const int n = g.n();
  if (g.is_complete()) return VertexCut::none(n - 1);
  if (!is_connected(g)) return disconnected_cut(g);
  VertexCut best = VertexCut::none(n);
  if (T.empty()) return best;
  const int t = static_cast<int>(T.size());
  Auxiliary aux = auxiliary_graph(g, T);
  std::optional<SubsetFamily> sel = selector_for(t, std::max(k, 1));
  if (sel) {
    const int count = static_cast<int>(sel->sets.size());
    std::vector<VertexCut> found(count, VertexCut::none(n));
    detail::parallel_for(count, [&](int j) {
      VertexSet x = map_ids(sel->sets[j], T);
      VertexSet I = greedy_independent_subset(g, x);
      if (I.empty()) return;
      VertexSet local_i;
      for (int v : I) local_i.push_back(aux.local[v]);
      local_i.push_back(aux.super);
      std::sort(local_i.begin(), local_i.end());
      IsolatingResult iso = isolating_vertex_cuts(aux.graph, local_i);
      for (size_t q = 0; q < iso.terminals.size(); ++q) {
        if (iso.terminals[q] == aux.super) continue;
        VertexSet c = map_ids(iso.separators[q], aux.ids);
        offer(found[j], g, cut_from_separator(g, c, aux.ids[iso.terminals[q]]));
      }
    });
    for (auto& c : found) keep_better(best, c);
    return best;
  }
  PairFamily p = symmetric_crossing_family(t, 1.0 / config().terminal_eps);
  const auto& pairs = p.pairs();
  const int count = static_cast<int>(pairs.size());
  std::vector<VertexCut> found(count, VertexCut::none(n));
  detail::parallel_for(count, [&](int j) {
    int a = aux.local[T[pairs[j].first]], b = aux.local[T[pairs[j].second]];
    VertexSet sinks{b, aux.super};
    std::sort(sinks.begin(), sinks.end());
    Separator sep = min_set_separator(aux.graph, {a}, sinks);
    if (!sep.exists) return;
    VertexSet c = map_ids(sep.vertices, aux.ids);
    offer(found[j], g, cut_from_separator(g, c, aux.ids[a]));
  });
  for (auto& c : found) keep_better(best, c);
  return best;
}

}  // namespace vconn
