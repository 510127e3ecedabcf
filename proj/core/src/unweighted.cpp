#include "vconn/unweighted.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "vconn/cnc.hpp"
#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/isocut.hpp"
#include "vconn/kernel.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/pseudorandom.hpp"

namespace vconn {

namespace {

void offer(VertexCut& best, const Graph& g, const VertexCut& c, std::vector<VertexCut>* log = nullptr) {
  if (!c.is_cut()) return;
  if (c.L.empty() || c.R.empty() || !validate_cut(g, c)) {
    counters().invalid_intermediate_cuts++;
    return;
  }
  if (log) log->push_back(c);
  keep_better(best, c);
}

}  // namespace

TerminalReductionResult terminal_reduction(const Graph& g, const VertexSet& T, int k) {
  if (T.empty()) throw InvariantError("terminal reduction needs terminals");
  if (k < 1) throw InvariantError("terminal reduction needs k >= 1");
  const int n = g.n();
  const int lg = log2n(n);
  TerminalReductionResult res;
  res.cut = VertexCut::none(n);
  auto& st = res.stats;
  st.terminals_in = static_cast<int>(T.size());

  double phi = config().ed_phi;
  ExpanderDecomposition ed = expander_decomposition(g, T, phi);
  for (int tries = 0; ed.budget_exceeded && tries < 4; ++tries) {
    phi /= 2;
    note_fallback("expander decomposition over budget, retrying with smaller phi");
    ed = expander_decomposition(g, T, phi);
  }
  st.phi = phi;
  st.budget_exceeded = ed.budget_exceeded;
  const VertexSet& X = ed.X;
  const int nx = static_cast<int>(X.size());
  std::vector<char> in_t(n, 0);
  for (int v : T) in_t[v] = 1;

  // T_xbar: the smallest floor(|T| / 100) terminals outside X, at least one.
  VertexSet t_xbar;
  {
    VertexSet rest = set_minus(T, X);
    size_t take = std::max<size_t>(1, T.size() / 100);
    take = std::min(take, rest.size());
    t_xbar.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(take));
  }

  // Pieces by terminal count.
  std::vector<VertexSet> small;  // U_small
  VertexSet t_big;
  for (auto& u : ed.pieces) {
    VertexSet tu;
    for (int v : u)
      if (in_t[v]) tu.push_back(v);
    const int tc = static_cast<int>(tu.size());
    if (tc >= 5) {
      const int take = (2 * tc + 2) / 3;
      t_big.insert(t_big.end(), tu.begin(), tu.begin() + take);
    } else if (tc > 0) {
      small.push_back(u);
    }
  }
  std::sort(t_big.begin(), t_big.end());

  // G' on X (ids [0, nx)) and U_small (ids nx + j).
  const int ns = static_cast<int>(small.size());
  std::vector<int> piece_of(n, -1);
  for (int j = 0; j < ns; ++j)
    for (int v : small[j]) piece_of[v] = j;
  std::vector<std::pair<int, int>> gp_edges;
  for (int i = 0; i < nx; ++i)
    for (int y : g.adj(X[i]))
      if (piece_of[y] >= 0) gp_edges.emplace_back(i, nx + piece_of[y]);
  Graph gp = Graph::from_edges_dedup(nx + ns, gp_edges);

  // U_low: pieces with at most 2k neighbors in G'; H_low keeps only their edges.
  std::vector<int> low_ids;  // G' ids of U_low
  std::vector<int> low_index(nx + ns, -1);
  for (int j = 0; j < ns; ++j)
    if (gp.degree(nx + j) <= 2 * k) {
      low_index[nx + j] = static_cast<int>(low_ids.size());
      low_ids.push_back(nx + j);
    }
  std::vector<std::pair<int, int>> hl_edges;
  for (auto [a, b] : gp.edges())
    if (low_index[b] >= 0) hl_edges.emplace_back(a, b);
  Graph h_low = Graph::from_edges_dedup(nx + ns, hl_edges);

  VertexSet t_small;
  const int scales = ceil_log2(k);
  const double lg2 = static_cast<double>(lg) * lg;
  const double lg3 = lg2 * lg;
  for (int i = 1; i <= scales; ++i) {
    const int a = 1 << i;
    VertexSet x_low;
    for (int xi = 0; xi < nx; ++xi)
      if (h_low.degree(xi) < config().tr_xlow_factor * a) x_low.push_back(X[xi]);

    // H_connected: a path over each shaved neighborhood R_x.
    std::vector<std::pair<int, int>> hc_edges;
    for (int xi = 0; xi < nx; ++xi) {
      VertexSet A(h_low.adj(xi).begin(), h_low.adj(xi).end());
      VertexSet r = shaving(h_low, A, a);
      for (size_t q = 1; q < r.size(); ++q) hc_edges.emplace_back(low_index[r[q - 1]], low_index[r[q]]);
    }
    Graph hc = Graph::from_edges_dedup(static_cast<int>(low_ids.size()), hc_edges);
    DistanceOracle dist = [&gp, &low_ids](int p, int q) {
      return static_cast<std::int64_t>(symdiff_size(gp, low_ids[p], low_ids[q]));
    };
    Clustering cover = cnc(hc, dist, static_cast<std::int64_t>(config().tr_cnc_factor * a),
                           CandidateEdges::GraphEdges);

    for (auto& part : cover.partitions) {
      std::vector<char> keep(nx, 1);
      for (auto& c : part) {
        const int csize = static_cast<int>(c.size());
        const int take = static_cast<int>(std::floor(csize / lg2));
        for (int q = 0; q < take && q < csize; ++q)
          for (int v : small[low_ids[c[q]] - nx])
            if (in_t[v]) t_small.push_back(v);
        if (csize > 10.0 * a * lg2) {
          std::vector<int> hits(nx, 0);
          for (int p : c)
            for (int xi : gp.adj(low_ids[p])) ++hits[xi];
          for (int xi = 0; xi < nx; ++xi)
            if (keep[xi] && hits[xi] > 0 && hits[xi] > (1.0 - 1.0 / lg3) * csize) keep[xi] = 0;
        }
      }
      VertexSet xprime;
      for (int xi = 0; xi < nx; ++xi)
        if (keep[xi]) xprime.push_back(X[xi]);
      for (const VertexSet& terms : {set_union(xprime, t_xbar), set_union(x_low, t_xbar)}) {
        ++st.balanced_calls;
        offer(res.cut, g, balanced_terminal_vc(g, terms, k), &st.candidates);
      }
    }
  }
  std::sort(t_small.begin(), t_small.end());
  t_small.erase(std::unique(t_small.begin(), t_small.end()), t_small.end());

  st.x = nx;
  st.t_big = static_cast<int>(t_big.size());
  st.t_small = static_cast<int>(t_small.size());
  st.t_xbar = static_cast<int>(t_xbar.size());
  VertexSet out = set_union(set_union(X, t_big), set_union(t_small, t_xbar));
  const size_t bound = static_cast<size_t>(std::floor(config().tr_shrink * static_cast<double>(T.size())));
  if (out.size() > bound) {
    // Keep X and T_xbar first, then the rest by ascending id.
    st.trimmed = true;
    if (T.size() > 10) counters().terminal_shrink_violations++;
    VertexSet first = set_union(X, t_xbar);
    VertexSet kept(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(std::min(bound, first.size())));
    for (int v : set_minus(out, first)) {
      if (kept.size() >= bound) break;
      kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end());
    out = std::move(kept);
  }
  counters().terminal_rounds++;
  st.terminals_out = static_cast<int>(out.size());
  res.terminals = std::move(out);
  return res;
}

VertexCut unbalanced_vc(const Graph& g, UnbalancedStats* stats) {
  const int n = g.n();
  if (n <= 1 || g.is_complete()) return VertexCut::none(std::max(0, n - 1));
  if (!is_connected(g)) return disconnected_cut(g);
  UnbalancedStats local;
  const int delta = g.min_degree();
  const int lg = log2n(n);
  const double reach = std::max(config().lambda * delta, static_cast<double>(delta) * lg);
  const int top = std::max(1, ceil_log2(static_cast<std::int64_t>(std::ceil(reach))));
  VertexCut best = VertexCut::none(n);
  for (int i = 1; i <= top; ++i) {
    const int l = 1 << i;
    ++local.scales;
    const double alpha = std::max(1.0, 2.0 * delta / l);
    PairFamily fam = symmetric_crossing_family(n, alpha);
    KernelIndex idx = build_kernel_index(g, l);

    const int nc = static_cast<int>(idx.clusters.size());
    std::vector<VertexCut> cluster_cuts(nc, VertexCut::none(n));
    detail::parallel_for(nc, [&](int c) {
      cluster_cuts[c] = subgraph_balanced_terminal_vc(g, idx.clusters[c], delta * lg);
    });
    VertexCut cluster_best = VertexCut::none(n);
    for (auto& c : cluster_cuts) offer(cluster_best, g, c);

    const auto& pairs = fam.pairs();
    const int np = static_cast<int>(pairs.size());
    std::vector<Weight> upper(np, n);
    detail::parallel_for(np, [&](int p) { upper[p] = query_kappa_upper(idx, pairs[p].first, pairs[p].second); });
    int winner = -1;
    for (int p = 0; p < np; ++p)
      if (upper[p] < n && (winner < 0 || upper[p] < upper[winner])) winner = p;
    local.pairs += np;
    local.clusters += nc;

    VertexCut scale_cut = cluster_best;
    if (winner >= 0 && (!cluster_best.is_cut() || upper[winner] < cluster_best.value)) {
      auto [s, t] = pairs[winner];
      Separator sep = min_st_separator(g, s, t);
      scale_cut = VertexCut::none(n);
      if (sep.exists) offer(scale_cut, g, cut_from_separator(g, sep.vertices, s));
    }
    offer(best, g, scale_cut);
  }
  if (!best.is_cut()) best = neighborhood_cut(g, g.min_degree_vertex());
  if (stats) *stats = local;
  return best;
}

VertexCut vertex_connectivity_unweighted(const Graph& g, UnweightedStats* stats) {
  const int n = g.n();
  if (n <= 1 || g.is_complete()) return VertexCut::none(std::max(0, n - 1));
  if (!is_connected(g)) return disconnected_cut(g);
  UnweightedStats local;
  const int delta = g.min_degree();
  const int vmin = g.min_degree_vertex();
  Graph h = ni_sparsify(g, delta);
  const int k = std::max(1, delta);

  // Cuts of the certificate below delta separate G as well; anything else is
  // re-derived in G or replaced by the trivial neighborhood cut.
  VertexCut best = neighborhood_cut(g, vmin);
  auto lift = [&](const VertexCut& c) {
    if (!c.is_cut() || c.L.empty()) return;
    VertexCut in_g = cut_from_separator(g, c.S, c.L.front());
    if (in_g.R.empty() || !validate_cut(g, in_g)) {
      counters().invalid_intermediate_cuts++;
      return;
    }
    keep_better(best, in_g);
  };

  lift(unbalanced_vc(h, &local.unbalanced));
  VertexSet T = iota_set(n);
  while (!T.empty()) {
    local.terminal_sizes.push_back(static_cast<int>(T.size()));
    ++local.rounds;
    lift(balanced_terminal_vc(h, T, k));
    TerminalReductionResult tr = terminal_reduction(h, T, k);
    lift(tr.cut);
    local.reductions.push_back(tr.stats);
    if (tr.terminals.size() >= T.size()) break;
    T = std::move(tr.terminals);
  }
  if (stats) *stats = std::move(local);
  return best;
}

}  // namespace vconn
