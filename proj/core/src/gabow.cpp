#include "vconn/gabow.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/pseudorandom.hpp"

namespace vconn {

namespace {

// Cut of H lifted to G: ids translate the sides, removed vertices join S.
VertexCut lift(const VertexCut& c, const std::vector<int>& ids, const VertexSet& removed) {
  VertexCut out;
  for (int v : c.L) out.L.push_back(ids[v]);
  for (int v : c.R) out.R.push_back(ids[v]);
  for (int v : c.S) out.S.push_back(ids[v]);
  std::sort(out.L.begin(), out.L.end());
  std::sort(out.R.begin(), out.R.end());
  std::sort(out.S.begin(), out.S.end());
  out.S = set_union(out.S, removed);
  out.value = static_cast<Weight>(out.S.size());
  return out;
}

}  // namespace

RichOrCut rich_set_or_cut(const Graph& g, int k) {
  const int n = g.n();
  const int delta = g.min_degree();
  RichOrCut out;
  out.rich.tau = (delta - k) / 2;
  if (2 * delta > n) {
    out.rich.T = iota_set(n);
    out.branch = "dense";
    return out;
  }
  const int a = g.min_degree_vertex();
  RootedResult rooted = rooted_connectivity(g, a);
  if (rooted.cut.is_cut() && rooted.value < k) {
    out.is_cut = true;
    out.cut = rooted.cut;
    out.branch = "rooted";
    return out;
  }
  if (!rooted.cut.is_cut() || rooted.value >= k + out.rich.tau) {
    out.rich.T.assign(g.adj(a).begin(), g.adj(a).end());
    out.branch = "neighborhood";
    return out;
  }
  const VertexCut& acb = rooted.cut;
  VertexSet ab = set_union(acb.L, acb.R);
  VertexSet T(ab.begin(), ab.begin() + std::min<size_t>(ab.size(), std::max(k, 1)));
  for (const VertexSet* probe : {&acb.S, static_cast<const VertexSet*>(&T)}) {
    if (probe->empty() || static_cast<int>(probe->size()) >= n) continue;
    RootedResult w = weak_separator(g, *probe);
    if (w.cut.is_cut() && w.cut.value < k) {
      out.is_cut = true;
      out.cut = w.cut;
      out.branch = "weak-separator";
      return out;
    }
  }
  out.rich.T = acb.S;
  out.branch = "separator";
  return out;
}

GapState initial_gap_state(const Graph& g) {
  GapState s;
  s.h = g;
  s.ids = iota_set(g.n());
  s.original_n = g.n();
  s.best = g.n() > 0 ? neighborhood_cut(g, g.min_degree_vertex()) : VertexCut::none(0);
  return s;
}

GapState increase_gap(const GapState& state, int k) {
  (void)k;
  const Graph& h = state.h;
  if (h.n() <= 1 || h.is_complete()) throw Exhausted("increase_gap: H is complete");
  GapState next;
  next.original_n = state.original_n;
  next.best = state.best;
  next.gap = state.gap + 1;

  const int x = 0;  // smallest original id, since ids stay ascending
  RootedResult rx = rooted_connectivity(h, x);
  if (rx.cut.is_cut()) {
    VertexCut c = lift(rx.cut, state.ids, state.removed);
    if (!next.best.is_cut() || c.value < next.best.value) next.best = c;
  }

  VertexSet keep;
  for (int v = 1; v < h.n(); ++v) keep.push_back(v);
  Graph hp = h.induced(keep);
  next.ids.assign(state.ids.begin() + 1, state.ids.end());
  next.removed = set_union(state.removed, VertexSet{state.ids[x]});

  const int target = h.min_degree() - 1;
  VertexSet F;
  for (int y : h.adj(x))
    if (hp.degree(y - 1) == target) F.push_back(y - 1);

  std::vector<std::pair<int, int>> edges = hp.edges();
  for (int u : F) {
    if (hp.degree(u) > target) continue;  // already patched as an earlier w
    int w = -1;
    for (int v = 0; v < hp.n(); ++v)
      if (v != u && !hp.adjacent(u, v)) {
        w = v;
        break;
      }
    if (w < 0) throw Exhausted("increase_gap: vertex without a non-neighbor");
    Separator sep = min_st_separator(hp, u, w);
    if (sep.exists) {
      VertexCut c = lift(cut_from_separator(hp, sep.vertices, u), next.ids, next.removed);
      if (!next.best.is_cut() || c.value < next.best.value) next.best = c;
    }
    edges.emplace_back(std::min(u, w), std::max(u, w));
    hp = Graph::from_edges(hp.n(), edges);
  }
  next.h = std::move(hp);
  return next;
}

GabowResult large_gap_vc(const Graph& h, int k, int gamma) {
  (void)gamma;
  GabowResult res;
  const int n = h.n();
  if (n <= 1 || h.is_complete()) {
    res.k_connected = true;
    res.cut = VertexCut::none(std::max(0, n - 1));
    return res;
  }
  RichOrCut rc = rich_set_or_cut(h, k);
  res.stats.rich_branch = rc.branch;
  if (rc.is_cut) {
    res.cut = rc.cut;
    return res;
  }
  RichSet rich = rc.rich;
  if (rich.tau < 1) {
    // Below k <= delta, a cut smaller than k leaves delta - kappa >= 1 on each side.
    rich = {iota_set(n), 1};
    res.stats.tau_fallback = true;
    note_fallback("large_gap_vc: tau < 1, using V as a 1-rich set");
  }
  const int t = static_cast<int>(rich.T.size());
  res.k_connected = true;
  res.cut = VertexCut::none(n - 1);
  if (t < 2) return res;

  const double rho = rich.tau;
  const double rho2 = std::max(rho, (t - k) / 2.0);
  const double c = config().mixing_c;
  double dd = 1 + 4 * (c * t) * (c * t) / (rho * rho2);
  int d = static_cast<int>(std::clamp(std::ceil(dd), 1.0, static_cast<double>(t - 1)));
  MixingGraph mg = build_mixing_graph(t, d);
  const auto a = static_cast<std::int64_t>(std::ceil(rho));
  const auto b = static_cast<std::int64_t>(std::ceil(rho2));
  while (!mg.complete && !mg.guarantees_edge(a, b)) {
    d = std::min(t - 1, 2 * d);
    mg = build_mixing_graph(t, d);
  }
  res.stats.mixing_degree = mg.degree;

  auto pairs = mg.graph.edges();
  std::vector<std::pair<int, int>> work;
  for (auto [i, j] : pairs) {
    int x = rich.T[i], y = rich.T[j];
    if (!h.adjacent(x, y)) work.emplace_back(x, y);
  }
  res.stats.expander_pairs = static_cast<std::int64_t>(work.size());
  std::vector<VertexCut> slot(work.size(), VertexCut::none(n - 1));
  detail::parallel_for(static_cast<int>(work.size()), [&](int i) {
    auto [x, y] = work[i];
    Separator sep = min_st_separator(h, x, y);
    if (sep.exists && sep.value < k) slot[i] = cut_from_separator(h, sep.vertices, x);
  });
  for (auto& s : slot)
    if (s.is_cut()) {
      keep_better(res.cut, s);
      res.k_connected = false;
    }
  return res;
}

GabowResult gabow_decide(const Graph& g, int k) {
  GabowResult res;
  const int n = g.n();
  res.stats.passes = 1;
  if (k <= 0) {
    res.k_connected = true;
    res.cut = VertexCut::none(std::max(0, n - 1));
    return res;
  }
  if (n <= 1 || g.is_complete()) {
    res.k_connected = n - 1 >= k;
    res.cut = VertexCut::none(std::max(0, n - 1));
    return res;
  }
  if (!is_connected(g)) {
    res.cut = disconnected_cut(g);
    return res;
  }
  Graph h = ni_sparsify(g, k);
  auto finish = [&](const VertexCut& c) {
    VertexCut in_g = cut_from_separator(g, c.S, c.L.front());
    in_g.value = static_cast<Weight>(in_g.S.size());
    if (in_g.R.empty() || !validate_cut(g, in_g)) {
      counters().invalid_intermediate_cuts++;
      throw InvariantError("gabow: cut does not lift to the input graph");
    }
    res.k_connected = false;
    res.cut = in_g;
    return res;
  };

  VertexCut degree_cut = neighborhood_cut(h, h.min_degree_vertex());
  if (degree_cut.is_cut() && degree_cut.value < k) return finish(degree_cut);

  if (static_cast<std::int64_t>(k) * k < n) {
    GabowResult r = large_gap_vc(h, k, 0);
    r.stats.passes = 1;
    if (!r.k_connected) {
      res.stats = r.stats;
      return finish(r.cut);
    }
    r.cut = VertexCut::none(n - 1);
    return r;
  }

  GapState st = initial_gap_state(h);
  const int rounds = static_cast<int>(std::ceil(h.min_degree() / std::sqrt(static_cast<double>(n))));
  for (int i = 0; i < rounds; ++i) {
    if (st.best.is_cut() && st.best.value < k) break;
    try {
      st = increase_gap(st, k);
    } catch (const Exhausted&) {
      break;
    }
  }
  res.stats.gap_rounds = st.gap;
  res.stats.removed = static_cast<int>(st.removed.size());
  if (st.best.is_cut() && st.best.value < k) return finish(st.best);

  const int kp = k - static_cast<int>(st.removed.size());
  res.k_connected = true;
  res.cut = VertexCut::none(n - 1);
  if (kp <= 0) return res;
  GabowResult r = large_gap_vc(st.h, kp, st.gap);
  r.stats.gap_rounds = st.gap;
  r.stats.removed = res.stats.removed;
  r.stats.passes = 1;
  res.stats = r.stats;
  if (r.k_connected) return res;
  return finish(lift(r.cut, st.ids, st.removed));
}

GabowResult gabow_vc(const Graph& g, int k) {
  GabowResult res = gabow_decide(g, k);
  int passes = 1;
  while (!res.k_connected && res.cut.is_cut() && res.cut.value > 0) {
    GabowResult next = gabow_decide(g, static_cast<int>(res.cut.value));
    ++passes;
    if (next.k_connected || !next.cut.is_cut()) break;
    res = std::move(next);
  }
  res.stats.passes = passes;
  return res;
}

}  // namespace vconn
