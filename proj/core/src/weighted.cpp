#include "vconn/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "parallel.hpp"
#include "vconn/cnc.hpp"
#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/maxflow.hpp"

namespace vconn {

namespace {

int log_weight(const WeightedDigraph& d) { return std::max(1, ceil_log2(d.max_weight())); }

std::vector<VertexSet> buckets_of(const WeightedDigraph& d, const VertexSet& a) {
  std::vector<VertexSet> b;
  for (int v : a) {
    int i = weight_bucket(d.weight(v));
    if (static_cast<int>(b.size()) <= i) b.resize(i + 1);
    b[i].push_back(v);
  }
  return b;
}

// L = a sink strongly connected component reachable from the first vertex
// whose reach is not everything.
VertexCut zero_cut(const WeightedDigraph& d) {
  for (int s = 0; s < d.n(); ++s) {
    VertexCut c = cut_from_separator(d, {}, s);
    if (!c.R.empty()) return c;
  }
  throw InvariantError("zero_cut: digraph is strongly connected");
}

// Maps a separator found in an instance back to D; counts it and keeps it
// when it validates.
void offer_separator(const WeightedDigraph& d, const VertexSet& sep, int s, VertexCut& best,
                     WeightedStats& st) {
  VertexCut c = cut_from_separator(d, sep, s);
  ++st.separators;
  counters().sparsified_separators++;
  if (c.R.empty() || !validate_cut(d, c)) {
    ++st.invalid;
    counters().sparsified_invalid++;
    return;
  }
  keep_better(best, c);
}

std::vector<Weight> powers_up_to(Weight limit, Weight from = 1) {
  std::vector<Weight> out;
  for (Weight x = from; x <= limit; x *= 2) out.push_back(x);
  return out;
}

}  // namespace

int weight_bucket(Weight w) {
  int i = 0;
  while (i < 62 && (Weight{1} << i) <= w) ++i;
  return i;
}

void WeightedStats::add(const WeightedStats& o) {
  guesses += o.guesses;
  clusters += o.clusters;
  pairs += o.pairs;
  instances += o.instances;
  instance_edges += o.instance_edges;
  naive_edges += o.naive_edges;
  separators += o.separators;
  invalid += o.invalid;
}

VertexSet identify_vlow(const WeightedDigraph& d, const VertexSet& C) {
  const int n = d.n();
  std::vector<char> in_c(n, 0);
  for (int v : C) in_c[v] = 1;
  std::vector<Weight> covered(n, 0);
  for (int u : C)
    for (int v : d.out(u)) covered[v] += d.weight(u);
  const long double limit = static_cast<long double>(config().vhigh_fraction) * d.weight_of(C);
  VertexSet low;
  for (int v = 0; v < n; ++v)
    if (static_cast<long double>(covered[v]) <= limit) low.push_back(v);
  return low;
}

PairFamily lopsided_pairs(const WeightedDigraph& d, const VertexSet& C, const VertexSet& v_low, Weight l,
                          Weight r) {
  const int n = d.n();
  const double logw = log_weight(d);
  const double lg = log2n(n);
  auto cb = buckets_of(d, C);
  auto db = buckets_of(d, v_low);
  PairFamily out(n);
  std::int64_t bound = 0;
  for (int i = 1; i < static_cast<int>(cb.size()); ++i) {
    if (cb[i].empty()) continue;
    std::int64_t row = 0;
    for (int j = 1; j < static_cast<int>(db.size()); ++j) {
      if (db[j].empty()) continue;
      const int ci = static_cast<int>(cb[i].size()), dj = static_cast<int>(db[j].size());
      const double lij = std::ceil(static_cast<double>(l) / (std::ldexp(1.0, i) * logw));
      const double deficit = std::ceil(n * static_cast<double>(l) * logw * lg * lg / static_cast<double>(r));
      const int li = static_cast<int>(std::clamp(lij, 1.0, static_cast<double>(ci)));
      const int rj = static_cast<int>(std::clamp(dj - deficit, 1.0, static_cast<double>(dj)));
      PairFamily f = asymmetric_crossing_family(cb[i], db[j], li, rj);
      for (auto [u, v] : f.pairs())
        if (u != v) out.add(u, v);
      row += f.declared_degree_bound;
    }
    bound = std::max(bound, row);
  }
  out.finalize();
  out.declared_degree_bound = bound;
  out.backend = "weight-buckets";
  return out;
}

LopsidedIndex::LopsidedIndex(const WeightedDigraph& d, int s) : s_(s) {
  const int n = d.n();
  in_sout_.assign(n, 0);
  for (int v : d.out(s)) in_sout_[v] = 1;
  out_minus_.resize(n);
  in_minus_.resize(n);
  for (int u = 0; u < n; ++u) {
    for (int v : d.out(u))
      if (!in_sout_[v]) out_minus_[u].push_back(v);
    for (int v : d.in(u))
      if (!in_sout_[v]) in_minus_[u].push_back(v);
  }
}

SparsifiedInstance sparsify_lopsided(const WeightedDigraph& d, int s, int t, const VertexSet& C) {
  if (!std::binary_search(C.begin(), C.end(), s)) throw InvariantError("sparsify_lopsided: s not in C");
  return sparsify_lopsided(d, LopsidedIndex(d, s), t, C);
}

SparsifiedInstance sparsify_lopsided(const WeightedDigraph& d, const LopsidedIndex& idx, int t,
                                     const VertexSet& C) {
  const int s = idx.source();
  if (!std::binary_search(C.begin(), C.end(), s)) throw InvariantError("sparsify_lopsided: s not in C");
  if (s == t || t < 0 || t >= d.n()) throw InvariantError("sparsify_lopsided: bad sink");
  VertexSet boundary = set_neighborhood(d, C, Direction::Out);
  SparsifiedInstance inst;
  inst.original = set_union(set_union(C, boundary), VertexSet{t});
  std::vector<int> local(d.n(), -1);
  for (int i = 0; i < static_cast<int>(inst.original.size()); ++i) local[inst.original[i]] = i;

  std::vector<std::pair<int, int>> arcs;
  for (int u : C) {
    const bool trimmed = idx.in_source_out(u);
    for (int v : trimmed ? std::span<const int>(idx.out_minus(u)) : d.out(u)) arcs.emplace_back(local[u], local[v]);
    for (int v : trimmed ? std::span<const int>(idx.in_minus(u)) : d.in(u))
      if (local[v] >= 0) arcs.emplace_back(local[v], local[u]);
  }
  for (int u : boundary)
    if (u != t) arcs.emplace_back(local[u], local[t]);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<Weight> w;
  w.reserve(inst.original.size());
  for (int v : inst.original) w.push_back(d.weight(v));
  inst.graph = WeightedDigraph::from_arcs(static_cast<int>(inst.original.size()), arcs, std::move(w));
  inst.s = local[s];
  inst.t = local[t];
  return inst;
}

WeightedDigraph sparsify_symmetric(const WeightedDigraph& d, int s, int t) {
  if (s == t) throw InvariantError("sparsify_symmetric: s == t");
  const int n = d.n();
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (int v : d.out(s)) in_s[v] = 1;
  for (int v : d.in(t)) in_t[v] = 1;
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v : d.out(u))
      if (!(in_s[u] && in_s[v]) && !(in_t[u] && in_t[v])) arcs.emplace_back(u, v);
  return WeightedDigraph::from_arcs(n, arcs, d.weights());
}

PairFamily symmetric_pairs(const WeightedDigraph& d, Weight l) {
  const int n = d.n();
  const double logw = log_weight(d);
  const double lambda = config().weighted_lambda;
  const double lg = log2n(n);
  auto vb = buckets_of(d, iota_set(n));
  PairFamily out(n);
  std::int64_t bound = 0;
  for (int i = 1; i < static_cast<int>(vb.size()); ++i) {
    if (vb[i].empty()) continue;
    std::int64_t row = 0;
    for (int j = 1; j <= i; ++j) {
      if (vb[j].empty()) continue;
      VertexSet u = i == j ? vb[i] : set_union(vb[i], vb[j]);
      const double alpha = std::min<double>(
          n, n * (std::ldexp(1.0, i) / static_cast<double>(std::max<Weight>(l, 1))) * logw * lambda * lambda * lg);
      PairFamily f = symmetric_crossing_family(static_cast<int>(u.size()), alpha);
      for (auto [a, b] : f.pairs())
        if (weight_bucket(d.weight(u[a])) == i) out.add(u[a], u[b]);
      row += f.declared_degree_bound;
    }
    bound = std::max(bound, row);
  }
  out.finalize();
  out.declared_degree_bound = bound;
  out.backend = "weight-buckets";
  return out;
}

VertexCut lopsided_vc(const WeightedDigraph& d, WeightedStats* stats) {
  const int n = d.n();
  if (n <= 1 || d.is_complete()) return VertexCut::none_without_value();
  if (!is_strongly_connected(d)) return zero_cut(d);
  WeightedStats local;
  const Weight total = d.total_weight();

  // Guesses differ only in which (C, s, t) they request; each triple runs once.
  std::map<VertexSet, int> cluster_id;
  std::vector<const VertexSet*> cluster_of;
  std::vector<std::tuple<int, int, int>> tasks;  // (s, cluster, t)
  for (Weight l : powers_up_to(total)) {
    Clustering cl = weighted_cnc(d, l);
    local.clusters += static_cast<int>(cl.clusters.size());
    for (const VertexSet& C : cl.clusters) {
      auto [it, fresh] = cluster_id.emplace(C, static_cast<int>(cluster_of.size()));
      if (fresh) cluster_of.push_back(&it->first);
      VertexSet v_low = identify_vlow(d, C);
      if (v_low.empty()) continue;
      for (Weight r : powers_up_to(total, l)) {
        ++local.guesses;
        PairFamily p = lopsided_pairs(d, C, v_low, l, r);
        local.pairs += static_cast<std::int64_t>(p.size());
        for (auto [s, t] : p.pairs())
          if (!d.has_arc(s, t)) tasks.emplace_back(s, it->second, t);
      }
    }
  }
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  std::vector<size_t> starts;
  for (size_t i = 0; i < tasks.size(); ++i)
    if (i == 0 || std::get<0>(tasks[i]) != std::get<0>(tasks[i - 1])) starts.push_back(i);
  starts.push_back(tasks.size());
  const int groups = static_cast<int>(starts.size()) - 1;
  std::vector<VertexCut> slot(groups, VertexCut::none_without_value());
  std::vector<WeightedStats> slot_stats(groups);
  detail::parallel_for(groups, [&](int g) {
    const int s = std::get<0>(tasks[starts[g]]);
    LopsidedIndex idx(d, s);
    for (size_t i = starts[g]; i < starts[g + 1]; ++i) {
      auto [src, c, t] = tasks[i];
      SparsifiedInstance inst = sparsify_lopsided(d, idx, t, *cluster_of[c]);
      WeightedStats& st = slot_stats[g];
      ++st.instances;
      st.instance_edges += inst.graph.m();
      st.naive_edges += d.m();
      counters().lopsided_instances++;
      counters().lopsided_edges += static_cast<std::uint64_t>(inst.graph.m());
      counters().lopsided_naive_edges += static_cast<std::uint64_t>(d.m());
      Separator sep = min_st_separator(inst.graph, inst.s, inst.t);
      if (!sep.exists) continue;
      VertexSet mapped;
      for (int v : sep.vertices) mapped.push_back(inst.original[v]);
      std::sort(mapped.begin(), mapped.end());
      offer_separator(d, mapped, src, slot[g], st);
    }
  });
  VertexCut best = VertexCut::none_without_value();
  for (int g = 0; g < groups; ++g) {
    keep_better(best, slot[g]);
    local.add(slot_stats[g]);
  }
  if (stats) *stats = local;
  return best;
}

VertexCut symmetric_vc(const WeightedDigraph& d, WeightedStats* stats) {
  const int n = d.n();
  if (n <= 1 || d.is_complete()) return VertexCut::none_without_value();
  if (!is_strongly_connected(d)) return zero_cut(d);
  WeightedStats local;
  std::vector<std::pair<int, int>> tasks;
  for (Weight l : powers_up_to(d.total_weight())) {
    ++local.guesses;
    PairFamily p = symmetric_pairs(d, l);
    local.pairs += static_cast<std::int64_t>(p.size());
    for (auto [s, t] : p.pairs())
      if (!d.has_arc(s, t)) tasks.emplace_back(s, t);
  }
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  const int count = static_cast<int>(tasks.size());
  std::vector<VertexCut> slot(count, VertexCut::none_without_value());
  std::vector<WeightedStats> slot_stats(count);
  detail::parallel_for(count, [&](int i) {
    auto [s, t] = tasks[i];
    WeightedDigraph h = sparsify_symmetric(d, s, t);
    WeightedStats& st = slot_stats[i];
    ++st.instances;
    st.instance_edges += h.m();
    st.naive_edges += d.m();
    counters().sparsified_instances++;
    counters().sparsified_edges += static_cast<std::uint64_t>(h.m());
    counters().naive_edges += static_cast<std::uint64_t>(d.m());
    Separator sep = min_st_separator(h, s, t);
    if (sep.exists) offer_separator(d, sep.vertices, s, slot[i], st);
  });
  VertexCut best = VertexCut::none_without_value();
  for (int i = 0; i < count; ++i) {
    keep_better(best, slot[i]);
    local.add(slot_stats[i]);
  }
  if (stats) *stats = local;
  return best;
}

VertexCut vertex_connectivity_weighted(const WeightedDigraph& d, WeightedRunStats* stats) {
  const int n = d.n();
  if (n <= 1) return VertexCut::none_without_value();
  if (!is_strongly_connected(d)) {
    VertexCut c = zero_cut(d);
    c.value = 0;
    return c;
  }
  if (d.is_complete()) return VertexCut::none_without_value();
  WeightedRunStats local;

  // Trivial baseline: the lightest out-neighborhood that leaves a vertex behind.
  VertexCut best = VertexCut::none_without_value();
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(d.out(v).size()) < n - 1) {
      VertexSet nb(d.out(v).begin(), d.out(v).end());
      keep_better(best, cut_from_separator(d, nb, v));
    }

  WeightedDigraph rev = d.reversed();
  auto from_reverse = [](VertexCut c) {
    std::swap(c.L, c.R);
    return c;
  };
  WeightedStats a, b;
  keep_better(best, lopsided_vc(d, &a));
  local.lopsided.add(a);
  keep_better(best, symmetric_vc(d, &b));
  local.symmetric.add(b);
  VertexCut rl = lopsided_vc(rev, &a);
  local.lopsided.add(a);
  VertexCut rs = symmetric_vc(rev, &b);
  local.symmetric.add(b);
  if (rl.is_cut()) keep_better(best, from_reverse(rl));
  if (rs.is_cut()) keep_better(best, from_reverse(rs));
  if (stats) *stats = local;
  return best;
}

}  // namespace vconn
