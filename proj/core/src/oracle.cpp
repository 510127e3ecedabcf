#include "vconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "vconn/config.hpp"

namespace vconn {

namespace {

// Shortest-augmenting-path max flow on an adjacency-list residual graph.
class AugmentingFlow {
 public:
  explicit AugmentingFlow(int nodes) : arcs_(nodes) {}

  void add(int u, int v, Weight cap) {
    arcs_[u].push_back({v, cap, static_cast<int>(arcs_[v].size())});
    arcs_[v].push_back({u, 0, static_cast<int>(arcs_[u].size()) - 1});
  }

  // Stops once the flow reaches `limit`.
  Weight run(int s, int t, Weight limit) {
    Weight flow = 0;
    const int n = static_cast<int>(arcs_.size());
    std::vector<std::pair<int, int>> parent(n);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
      parent[s] = {s, -1};
      std::deque<int> q{s};
      while (!q.empty() && parent[t].first < 0) {
        int u = q.front();
        q.pop_front();
        for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
          const Arc& a = arcs_[u][i];
          if (a.cap > 0 && parent[a.to].first < 0) {
            parent[a.to] = {u, i};
            q.push_back(a.to);
          }
        }
      }
      if (parent[t].first < 0) break;
      Weight push = limit - flow;
      for (int v = t; v != s; v = parent[v].first) push = std::min(push, arcs_[parent[v].first][parent[v].second].cap);
      for (int v = t; v != s; v = parent[v].first) {
        Arc& a = arcs_[parent[v].first][parent[v].second];
        a.cap -= push;
        arcs_[v][a.rev].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(arcs_.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Arc& a : arcs_[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push_back(a.to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Weight cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs_;
};

// Vertex v splits into v (entry) and v + n (exit).
template <class OutFn, class WeightFn>
PairKappa split_flow(int n, int s, int t, OutFn out, WeightFn w, Weight limit) {
  PairKappa res;
  for (int v : out(s))
    if (v == t) return res;
  Weight inf = 1;
  for (int v = 0; v < n; ++v) inf += w(v);
  AugmentingFlow f(2 * n);
  for (int v = 0; v < n; ++v) f.add(v, v + n, (v == s || v == t) ? inf : w(v));
  for (int u = 0; u < n; ++u)
    for (int v : out(u)) f.add(u + n, v, inf);
  Weight value = f.run(s, t + n, std::min(limit, inf));
  res.separable = true;
  res.value = value;
  auto seen = f.reachable(s);
  for (int v = 0; v < n; ++v)
    if (v != s && v != t && seen[v] && !seen[v + n]) res.separator.push_back(v);
  return res;
}

PairKappa pair_kappa(const Graph& g, int s, int t, Weight limit) {
  if (s == t) throw InvariantError("brute_pair_kappa: s == t");
  return split_flow(
      g.n(), s, t, [&](int v) { return g.adj(v); }, [](int) { return Weight{1}; }, limit);
}

PairKappa pair_kappa(const WeightedDigraph& d, int s, int t, Weight limit) {
  if (s == t) throw InvariantError("brute_pair_kappa: s == t");
  return split_flow(
      d.n(), s, t, [&](int v) { return d.out(v); }, [&](int v) { return d.weight(v); }, limit);
}

}  // namespace

PairKappa brute_pair_kappa(const Graph& g, int s, int t) {
  return pair_kappa(g, s, t, std::numeric_limits<Weight>::max());
}

PairKappa brute_pair_kappa(const WeightedDigraph& d, int s, int t) {
  return pair_kappa(d, s, t, std::numeric_limits<Weight>::max());
}

VertexCut brute_kappa(const Graph& g) {
  const int n = g.n();
  if (n > 64) throw SizeGuard("brute_kappa: n > 64");
  if (n <= 1) return VertexCut::none(0);
  if (!is_connected(g)) return disconnected_cut(g);
  if (g.is_complete()) return VertexCut::none(n - 1);
  Weight best = std::numeric_limits<Weight>::max();
  VertexSet best_sep;
  int best_s = -1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      // A limit of `best` cannot certify an improvement; stop there.
      PairKappa p = pair_kappa(g, s, t, best);
      if (p.value < best) {
        best = p.value;
        best_sep = p.separator;
        best_s = s;
      }
    }
  VertexCut c = cut_from_separator(g, best_sep, best_s);
  c.value = best;
  return c;
}

VertexCut brute_kappa(const WeightedDigraph& d) {
  const int n = d.n();
  if (n > 24) throw SizeGuard("brute_kappa: weighted n > 24");
  if (n <= 1) return VertexCut::none_without_value();
  if (!is_strongly_connected(d)) {
    for (int s = 0; s < n; ++s) {
      VertexCut c = cut_from_separator(d, {}, s);
      if (!c.R.empty()) {
        c.value = 0;
        return c;
      }
    }
  }
  if (d.is_complete()) return VertexCut::none_without_value();
  Weight best = std::numeric_limits<Weight>::max();
  VertexSet best_sep;
  int best_s = -1;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || d.has_arc(s, t)) continue;
      PairKappa p = pair_kappa(d, s, t, best);
      if (p.value < best) {
        best = p.value;
        best_sep = p.separator;
        best_s = s;
      }
    }
  VertexCut c = cut_from_separator(d, best_sep, best_s);
  c.value = best;
  return c;
}

Weight subset_kappa(const Graph& g) {
  const int n = g.n();
  if (n > 18) throw SizeGuard("subset_kappa: n > 18");
  if (g.is_complete()) return std::max(0, n - 1);
  std::vector<std::uint32_t> nb(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.adj(u)) nb[u] |= 1u << v;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  auto disconnected = [&](std::uint32_t removed) {
    std::uint32_t live = all & ~removed;
    if (std::popcount(live) < 2) return false;
    std::uint32_t seen = live & (~live + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= live & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen != live;
  };
  for (int k = 0; k <= n - 2; ++k)
    for (std::uint32_t m = 0; m <= all; ++m) {
      if (std::popcount(m) == k && disconnected(m)) return k;
      if (m == all) break;
    }
  return n - 1;
}

Weight subset_kappa(const WeightedDigraph& d) {
  const int n = d.n();
  if (n > 16) throw SizeGuard("subset_kappa: weighted n > 16");
  if (d.is_complete()) return -1;
  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : d.out(u)) {
      out[u] |= 1u << v;
      in[v] |= 1u << u;
    }
  auto closure = [&](std::uint32_t live, int root, const std::vector<std::uint32_t>& nb) {
    std::uint32_t seen = 1u << root, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= live & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  };
  Weight best = -1;
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::uint32_t live = all & ~m;
    if (std::popcount(live) < 2) continue;
    int root = std::countr_zero(live);
    if (closure(live, root, out) == live && closure(live, root, in) == live) continue;
    Weight w = 0;
    for (std::uint32_t f = m; f; f &= f - 1) w += d.weight(std::countr_zero(f));
    if (best < 0 || w < best) best = w;
  }
  return best;
}

// ---------------------------------------------------------------- planted instances

namespace {

struct Draft {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Weight> weights;
  VertexSet L, S, R;
};

Draft draft_undirected(PlantedKind kind, const PlantedParams& p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p.density);
  Draft d;
  d.n = p.l + p.s + p.r;
  for (int i = 0; i < p.l; ++i) d.L.push_back(i);
  for (int i = 0; i < p.s; ++i) d.S.push_back(p.l + i);
  for (int i = 0; i < p.r; ++i) d.R.push_back(p.l + p.s + i);
  const bool dense_left = kind == PlantedKind::Unbalanced;
  auto pairs = [&](const VertexSet& a, const VertexSet& b, bool complete) {
    for (int u : a)
      for (int v : b)
        if (u < v && (complete || coin(rng))) d.edges.emplace_back(u, v);
  };
  pairs(d.L, d.L, dense_left);
  pairs(d.L, d.S, dense_left);
  pairs(d.S, d.S, false);
  pairs(d.S, d.R, false);
  pairs(d.R, d.R, false);
  return d;
}

Draft draft_directed(PlantedKind kind, const PlantedParams& p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p.density);
  std::bernoulli_distribution half(p.density / 2);
  std::uniform_int_distribution<Weight> wdist(1, std::max<Weight>(1, p.max_weight));
  Draft d = draft_undirected(PlantedKind::BalancedTerminal, PlantedParams{p.l, p.s, p.r, 0, 1, 0}, rng);
  d.edges.clear();
  const bool lopsided = kind == PlantedKind::Lopsided;
  auto arcs = [&](const VertexSet& a, const VertexSet& b, bool complete, bool sparse) {
    for (int u : a)
      for (int v : b)
        if (u != v && (complete || (sparse ? half(rng) : coin(rng)))) d.edges.emplace_back(u, v);
  };
  arcs(d.L, d.L, lopsided, false);
  arcs(d.L, d.S, lopsided, false);
  arcs(d.S, d.L, false, false);
  arcs(d.S, d.S, false, false);
  arcs(d.S, d.R, false, false);
  arcs(d.R, d.S, false, false);
  arcs(d.R, d.R, false, false);
  arcs(d.R, d.L, false, true);
  d.weights.resize(d.n);
  for (auto& w : d.weights) w = wdist(rng);
  return d;
}

VertexSet remap(const VertexSet& a, const std::vector<int>& perm) {
  VertexSet out;
  for (int v : a) out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PlantedInstance generate_planted(PlantedKind kind, const PlantedParams& params, std::uint64_t seed) {
  if (params.l < 1 || params.r < 1 || params.s < 0)
    throw GenerationFailed("planted instance needs nonempty L and R");
  const bool directed = kind == PlantedKind::Lopsided || kind == PlantedKind::Symmetric;
  const int n = params.l + params.s + params.r;
  if ((directed && n > 24) || (!directed && n > 64))
    throw GenerationFailed("planted instance exceeds the oracle size guard");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < params.retries; ++attempt) {
    Draft d = directed ? draft_directed(kind, params, rng) : draft_undirected(kind, params, rng);
    std::vector<int> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : d.edges) {
      u = perm[u];
      v = perm[v];
    }
    PlantedInstance inst;
    inst.kind = kind;
    inst.params = params;
    inst.seed = seed;
    inst.directed = directed;
    inst.planted.L = remap(d.L, perm);
    inst.planted.S = remap(d.S, perm);
    inst.planted.R = remap(d.R, perm);
    if (directed) {
      std::vector<Weight> w(d.n);
      for (int v = 0; v < d.n; ++v) w[perm[v]] = d.weights[v];
      inst.digraph = WeightedDigraph::from_arcs(d.n, d.edges, w);
      const auto& dg = inst.digraph;
      Weight wl = dg.weight_of(inst.planted.L), wr = dg.weight_of(inst.planted.R);
      if (kind == PlantedKind::Lopsided && wr < 16 * wl) continue;
      if (kind == PlantedKind::Symmetric &&
          (wl > wr || static_cast<double>(wr) > config().weighted_lambda * wl * log2n(d.n)))
        continue;
      inst.planted.value = dg.weight_of(inst.planted.S);
      if (!validate_cut(dg, inst.planted) || !is_strongly_connected(dg)) continue;
      VertexCut truth = brute_kappa(dg);
      if (!truth.is_cut() || truth.value != inst.planted.value) continue;
    } else {
      inst.graph = Graph::from_edges(d.n, d.edges);
      inst.digraph = WeightedDigraph::from_graph(inst.graph);
      inst.planted.value = static_cast<Weight>(inst.planted.S.size());
      if (!validate_cut(inst.graph, inst.planted) || !is_connected(inst.graph)) continue;
      VertexCut truth = brute_kappa(inst.graph);
      if (!truth.is_cut() || truth.value != inst.planted.value) continue;
    }
    return inst;
  }
  throw GenerationFailed("no verified planted instance after " + std::to_string(params.retries) +
                         " attempts");
}

bool reverify(const PlantedInstance& inst) {
  PlantedInstance again = generate_planted(inst.kind, inst.params, inst.seed);
  if (again.planted.L != inst.planted.L || again.planted.S != inst.planted.S ||
      again.planted.R != inst.planted.R || again.planted.value != inst.planted.value)
    return false;
  if (inst.directed)
    return again.digraph.arcs() == inst.digraph.arcs() && again.digraph.weights() == inst.digraph.weights();
  return again.graph.edges() == inst.graph.edges();
}

// ---------------------------------------------------------------- checkers

namespace {

std::string set_text(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

double choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls fn(indices) for every k-subset of [n] in lexicographic order until fn returns false.
template <class Fn>
void for_each_subset(int n, int k, Fn fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CheckResult check_crossing_family(const PairFamily& p, const VertexSet& A, const VertexSet& B, int l,
                                  int r, std::uint64_t budget) {
  CheckResult res;
  if (p.declared_degree_bound > 0 && p.max_degree() > p.declared_degree_bound) {
    res.verdict = false;
    res.method = "analytic";
    res.counterexample = "max degree " + std::to_string(p.max_degree()) + " exceeds declared bound " +
                         std::to_string(p.declared_degree_bound);
    return res;
  }
  const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  if (l > na || r > nb || l < 1 || r < 1) {
    res.method = "analytic";
    return res;
  }
  std::vector<int> bpos(std::max(p.universe(), B.empty() ? 0 : B.back() + 1) + 1, -1);
  for (int i = 0; i < nb; ++i) bpos[B[i]] = i;
  std::vector<std::vector<int>> out(na);
  std::vector<int> apos(bpos.size() + A.size() + 1, -1);
  for (int i = 0; i < na; ++i)
    if (A[i] < static_cast<int>(apos.size())) apos[A[i]] = i;
  for (auto& [u, v] : p.pairs())
    if (u < static_cast<int>(apos.size()) && apos[u] >= 0 && v < static_cast<int>(bpos.size()) &&
        bpos[v] >= 0)
      out[apos[u]].push_back(bpos[v]);
  std::vector<int> hit(nb, 0);
  auto judge = [&](const std::vector<int>& idx) {
    std::fill(hit.begin(), hit.end(), 0);
    int covered = 0;
    for (int i : idx)
      for (int b : out[i]) covered += !hit[b]++ ? 1 : 0;
    // Every R of size r meets N_P(L) iff fewer than r vertices of B are missed.
    if (nb - covered >= r) {
      VertexSet L, R;
      for (int i : idx) L.push_back(A[i]);
      for (int b = 0; b < nb && static_cast<int>(R.size()) < r; ++b)
        if (!hit[b]) R.push_back(B[b]);
      res.verdict = false;
      res.counterexample = "L=" + set_text(L) + " R=" + set_text(R);
      return false;
    }
    return true;
  };
  if (choose(na, l) <= static_cast<double>(budget)) {
    res.method = "exhaustive";
    for_each_subset(na, l, judge);
    return res;
  }
  res.method = "sampled";
  std::mt19937_64 rng(config().seed ^ 0xc0ffee);
  std::vector<int> ids(na);
  std::iota(ids.begin(), ids.end(), 0);
  for (std::uint64_t t = 0; t < std::min<std::uint64_t>(budget, 200000) && res.verdict; ++t) {
    for (int i = 0; i < l; ++i) std::swap(ids[i], ids[i + rng() % (na - i)]);
    std::vector<int> idx(ids.begin(), ids.begin() + l);
    std::sort(idx.begin(), idx.end());
    judge(idx);
  }
  return res;
}

CheckResult check_symmetric_crossing_family(const PairFamily& p, int n, double alpha) {
  CheckResult res;
  res.method = "exhaustive";
  if (n > 22) throw SizeGuard("check_symmetric_crossing_family: n > 22");
  if (p.declared_degree_bound > 0 && p.max_degree() > p.declared_degree_bound) {
    res.verdict = false;
    res.counterexample = "max degree exceeds declared bound";
    return res;
  }
  std::vector<std::uint32_t> out(n, 0);
  for (auto& [u, v] : p.pairs())
    if (u < n && v < n && u != v) out[u] |= 1u << v;
  const std::uint32_t all = (1u << n) - 1;
  std::vector<std::uint32_t> reach(1u << n, 0);
  for (std::uint32_t L = 1; L <= all; ++L) {
    int low = std::countr_zero(L);
    reach[L] = reach[L & (L - 1)] | out[low];
    int l = std::popcount(L);
    std::uint32_t rmax = all & ~L & ~reach[L];
    int r = std::popcount(rmax);
    int s = n - l - r;
    if (r >= l && s <= alpha * l + 1e-9) {
      VertexSet Ls, Rs;
      for (int v = 0; v < n; ++v) {
        if (L >> v & 1) Ls.push_back(v);
        if (rmax >> v & 1) Rs.push_back(v);
      }
      res.verdict = false;
      res.counterexample = "L=" + set_text(Ls) + " R=" + set_text(Rs);
      return res;
    }
  }
  return res;
}

CheckResult check_selector(const SubsetFamily& f, int n, int k, double eps) {
  CheckResult res;
  res.method = "exhaustive";
  if (n > 16) throw SizeGuard("check_selector: n > 16");
  std::vector<std::uint32_t> masks;
  for (auto& u : f.sets) {
    if (u.size() < 2) {
      res.verdict = false;
      res.counterexample = "set " + set_text(u) + " has fewer than two elements";
      return res;
    }
    std::uint32_t m = 0;
    for (int v : u) m |= 1u << v;
    masks.push_back(m);
  }
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t L = 1; L <= all; ++L) {
    int l = std::popcount(L);
    if (l > k || !(l > eps * k + 1e-12)) continue;
    // The property is monotone in S, so only maximal S need checking.
    int s = std::min(k, n - l);
    std::uint32_t rest = all & ~L;
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
      if (rest >> v & 1) free.push_back(v);
    bool ok = true;
    for_each_subset(static_cast<int>(free.size()), s, [&](const std::vector<int>& idx) {
      std::uint32_t S = 0;
      for (int i : idx) S |= 1u << free[i];
      bool found = false;
      for (auto m : masks)
        if (std::popcount(m & L) == 1 && (m & S) == 0) {
          found = true;
          break;
        }
      if (!found) {
        VertexSet Ls, Ss;
        for (int v = 0; v < n; ++v) {
          if (L >> v & 1) Ls.push_back(v);
          if (S >> v & 1) Ss.push_back(v);
        }
        res.counterexample = "L=" + set_text(Ls) + " S=" + set_text(Ss);
        ok = false;
      }
      return ok;
    });
    if (!ok) {
      res.verdict = false;
      return res;
    }
  }
  return res;
}

CheckResult check_disperser_exhaustive(const LeftRegularBipartite& b, int k, double eps,
                                       std::uint64_t budget) {
  CheckResult res;
  if (k > b.left) {
    res.method = "analytic";
    return res;
  }
  if (choose(b.left, k) > static_cast<double>(budget)) {
    res.decided = false;
    res.method = "none";
    return res;
  }
  res.method = "exhaustive";
  const double need = (1.0 - eps) * b.right - 1e-9;
  std::vector<char> seen(b.right);
  for_each_subset(b.left, k, [&](const std::vector<int>& idx) {
    std::fill(seen.begin(), seen.end(), 0);
    int c = 0;
    for (int v : idx)
      for (int i = 0; i < b.degree; ++i) c += !seen[b.at(v, i)]++ ? 1 : 0;
    if (c < need) {
      res.verdict = false;
      res.counterexample = "left set " + set_text(VertexSet(idx.begin(), idx.end()));
      return false;
    }
    return true;
  });
  return res;
}

ClusteringReport check_clustering(const Graph& g, const Clustering& c, const DistanceOracle& dist,
                                  std::int64_t d, CandidateEdges candidates, double c1, double c2,
                                  int samples, std::uint64_t seed) {
  ClusteringReport rep;
  const int n = g.n();
  const int lg = log2n(std::max(n, 2));
  rep.partitions = static_cast<int>(c.partitions.size());
  rep.partition_bound = static_cast<int>(std::floor(c1 * lg + 1e-9));
  if (rep.partitions > rep.partition_bound) {
    rep.verdict = false;
    rep.counterexample = "too many partitions";
  }
  for (auto& part : c.partitions) {
    std::vector<int> cnt(n, 0);
    for (auto& cl : part)
      for (int v : cl) ++cnt[v];
    for (int v = 0; v < n; ++v)
      if (cnt[v] != 1) rep.exact_partitions = false;
  }
  if (!rep.exact_partitions) {
    rep.verdict = false;
    rep.counterexample = "a partition does not cover V exactly once";
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples && n > 0; ++t) {
    int root = static_cast<int>(rng() % n);
    int target = 1 + static_cast<int>(rng() % std::max(1, std::min(n, 12)));
    VertexSet L{root};
    while (static_cast<int>(L.size()) < target) {
      std::vector<int> cand;
      auto consider = [&](int y) {
        if (set_contains(L, y)) return;
        for (int x : L)
          if (dist(x, y) > d) return;
        cand.push_back(y);
      };
      if (candidates == CandidateEdges::AllPairs) {
        for (int y = 0; y < n; ++y) consider(y);
      } else {
        VertexSet nb = set_neighborhood(g, L);
        for (int y : nb) consider(y);
      }
      if (cand.empty()) break;
      int y = cand[rng() % cand.size()];
      L.insert(std::lower_bound(L.begin(), L.end(), y), y);
    }
    ++rep.cover_samples;
    std::vector<int> common = c.membership[L[0]];
    for (size_t i = 1; i < L.size() && !common.empty(); ++i) common = set_intersection(common, c.membership[L[i]]);
    if (common.empty()) {
      ++rep.cover_failures;
      if (rep.verdict) rep.counterexample = "uncovered set " + set_text(L);
      rep.verdict = false;
    }
  }

  rep.distance_bound = static_cast<std::int64_t>(std::floor(c2 * static_cast<double>(d) * lg + 1e-9));
  for (auto& cl : c.clusters) {
    const int m = static_cast<int>(cl.size());
    auto probe = [&](int a, int b) {
      std::int64_t x = dist(cl[a], cl[b]);
      rep.max_intra_distance = std::max(rep.max_intra_distance, x);
    };
    if (m <= 60) {
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) probe(a, b);
    } else {
      for (int t = 0; t < 2000; ++t) probe(static_cast<int>(rng() % m), static_cast<int>(rng() % m));
    }
  }
  if (rep.max_intra_distance > rep.distance_bound) {
    rep.verdict = false;
    if (rep.counterexample.empty()) rep.counterexample = "intra-cluster distance above bound";
  }
  return rep;
}

}  // namespace vconn
