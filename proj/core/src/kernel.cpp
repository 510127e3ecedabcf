#include "vconn/kernel.hpp"

#include <algorithm>

#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"

namespace vconn {

KernelIndex build_kernel_index(const Graph& g, int l) {
  if (l < 1) throw InvariantError("kernel index needs l >= 1");
  KernelIndex idx;
  idx.graph = std::make_shared<const Graph>(g);
  idx.l = l;
  idx.delta = g.min_degree();
  const int n = g.n();
  const int lg = log2n(n);
  const double low = config().c_low * idx.delta;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) <= low) idx.v_low.push_back(v);

  Graph sub = g.induced(idx.v_low);
  const Graph& gref = *idx.graph;
  const VertexSet& ids = idx.v_low;
  DistanceOracle dist = [&gref, &ids](int a, int b) {
    return static_cast<std::int64_t>(symdiff_size(gref, ids[a], ids[b]));
  };
  Clustering c = cnc(sub, dist, 4LL * l, CandidateEdges::GraphEdges, &idx.cnc_stats);
  idx.index.assign(n, {});
  for (auto& cl : c.clusters) {
    VertexSet mapped;
    mapped.reserve(cl.size());
    for (int v : cl) mapped.push_back(ids[v]);
    const int id = static_cast<int>(idx.clusters.size());
    for (int v : mapped) idx.index[v].push_back(id);
    idx.clusters.push_back(std::move(mapped));
  }
  idx.sketch_threshold = static_cast<std::int64_t>(l) * lg * lg;
  idx.sketches = sketch_construct(g, idx.sketch_threshold);
  idx.cluster_limit = static_cast<int>(config().cluster_gate * idx.delta * lg);
  return idx;
}

Kernel kernel_graph(const KernelIndex& idx, int cluster, int s, int t) {
  const Graph& g = *idx.graph;
  if (s == t) throw InvariantError("kernel needs s != t");
  const VertexSet& vi = idx.clusters.at(cluster);
  std::vector<char> closed_t(g.n(), 0);
  closed_t[t] = 1;
  for (int y : g.adj(t)) closed_t[y] = 1;
  VertexSet core;
  for (int v : vi)
    if (!closed_t[v]) core.push_back(v);
  if (core.empty()) throw EmptyKernel("cluster is inside N[t]");

  std::vector<std::pair<int, int>> edges;
  for (int y : g.adj(s)) edges.emplace_back(s, y);
  std::vector<char> in_core(g.n(), 0);
  for (int u : core) in_core[u] = 1;
  for (int u : core) {
    // N(u) - N(s) from the recovered symmetric difference.
    std::optional<VertexSet> diff = sketch_recover(idx.sketches[u], idx.sketches[s]);
    VertexSet only_u;
    if (diff) {
      for (int y : *diff)
        if (g.adjacent(u, y)) only_u.push_back(y);
    } else {
      VertexSet nu(g.adj(u).begin(), g.adj(u).end()), ns(g.adj(s).begin(), g.adj(s).end());
      only_u = set_minus(nu, ns);
    }
    for (int y : only_u) edges.emplace_back(u, y);
  }
  VertexSet boundary = set_neighborhood(g, core);
  for (int u : boundary)
    if (u != t) edges.emplace_back(u, t);

  VertexSet verts = set_union(set_union(core, boundary), {s, t});
  VertexSet ns(g.adj(s).begin(), g.adj(s).end());
  verts = set_union(verts, ns);
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
  for (auto& [a, b] : edges) {
    a = local[a];
    b = local[b];
  }
  Kernel k;
  k.graph = Graph::from_edges_dedup(static_cast<int>(verts.size()), std::move(edges));
  k.vertices = std::move(verts);
  k.s = local[s];
  k.t = local[t];
  counters().kernel_graphs++;
  counters().kernel_edges += static_cast<std::uint64_t>(k.graph.m());
  return k;
}

KernelQuery query_kernel(const KernelIndex& idx, int s, int t) {
  const Graph& g = *idx.graph;
  KernelQuery q;
  q.value = g.n();
  q.cut = VertexCut::none(g.n());
  for (int i : idx.index[s]) {
    if (static_cast<int>(idx.clusters[i].size()) > idx.cluster_limit) continue;
    Kernel k;
    try {
      k = kernel_graph(idx, i, s, t);
    } catch (const EmptyKernel&) {
      continue;
    }
    Separator sep = min_st_separator(k.graph, k.s, k.t);
    if (!sep.exists || sep.value >= q.value) continue;
    VertexSet mapped;
    for (int v : sep.vertices) mapped.push_back(k.vertices[v]);
    std::sort(mapped.begin(), mapped.end());
    VertexCut cut = cut_from_separator(g, mapped, s);
    if (!validate_cut(g, cut) || cut.R.empty()) {
      counters().invalid_intermediate_cuts++;
      continue;
    }
    q.value = sep.value;
    q.cluster = i;
    q.cut = std::move(cut);
  }
  return q;
}

Weight query_kappa_upper(const KernelIndex& idx, int s, int t) { return query_kernel(idx, s, t).value; }

}  // namespace vconn
