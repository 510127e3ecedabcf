#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>

#include "vconn/config.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/unweighted.hpp"

namespace vconn {

Rational terminal_expansion(const Graph& g, const VertexSet& T, const VertexCut& cut) {
  (void)g;
  const std::int64_t ts = static_cast<std::int64_t>(set_intersection(T, cut.S).size());
  const std::int64_t tl = static_cast<std::int64_t>(set_intersection(T, cut.L).size()) + ts;
  const std::int64_t tr = static_cast<std::int64_t>(set_intersection(T, cut.R).size()) + ts;
  const std::int64_t den = std::min(tl, tr);
  if (den == 0) throw UndefinedExpansion("no terminal on one side of the cut");
  const std::int64_t num = static_cast<std::int64_t>(cut.S.size());
  const std::int64_t d = std::gcd(num, den);
  return {num / d, den / d};
}

namespace {

struct LocalCut {
  VertexSet L, S;  // local ids
  std::int64_t s = 0, den = 0;
  bool found = false;
};

// Keeps the sparser cut; ties keep the earlier one.
void consider(LocalCut& best, LocalCut c) {
  if (!best.found || c.s * best.den < best.s * c.den) {
    c.found = true;
    best = std::move(c);
  }
}

// Cut (L, N(L), rest) of h scored against the terminal mask; returns false
// when it is not a cut or not (T, phi)-sparse.
bool score(const Graph& h, const std::vector<char>& term, const VertexSet& L, double phi, LocalCut& out) {
  VertexSet S = set_neighborhood(h, L);
  const std::int64_t rest = h.n() - static_cast<std::int64_t>(L.size() + S.size());
  if (L.empty() || rest <= 0) return false;
  std::int64_t tl = 0, ts = 0, total = 0;
  for (int v = 0; v < h.n(); ++v) total += term[v];
  for (int v : L) tl += term[v];
  for (int v : S) ts += term[v];
  const std::int64_t tr = total - tl - ts;
  const std::int64_t den = std::min(tl + ts, tr + ts);
  if (den <= 0) return false;
  const std::int64_t s = static_cast<std::int64_t>(S.size());
  if (!(static_cast<double>(s) < phi * static_cast<double>(den))) return false;
  out.L = L;
  out.S = std::move(S);
  out.s = s;
  out.den = den;
  return true;
}

LocalCut exhaustive_search(const Graph& h, const std::vector<char>& term, double phi) {
  const int n = h.n();
  std::vector<std::uint32_t> adj(n, 0);
  std::uint32_t tmask = 0;
  for (int v = 0; v < n; ++v) {
    for (int y : h.adj(v)) adj[v] |= 1u << y;
    if (term[v]) tmask |= 1u << v;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  LocalCut best;
  for (std::uint32_t l = 1; l < all; ++l) {
    std::uint32_t nb = 0;
    for (std::uint32_t f = l; f; f &= f - 1) nb |= adj[std::countr_zero(f)];
    nb &= ~l;
    const std::uint32_t r = all & ~l & ~nb;
    if (!r) continue;
    const std::int64_t den = std::min(std::popcount(tmask & (l | nb)), std::popcount(tmask & (r | nb)));
    if (den <= 0) continue;
    const std::int64_t s = std::popcount(nb);
    if (!(static_cast<double>(s) < phi * static_cast<double>(den))) continue;
    if (best.found && s * best.den >= best.s * den) continue;
    LocalCut c;
    for (std::uint32_t f = l; f; f &= f - 1) c.L.push_back(std::countr_zero(f));
    for (std::uint32_t f = nb; f; f &= f - 1) c.S.push_back(std::countr_zero(f));
    c.s = s;
    c.den = den;
    consider(best, std::move(c));
  }
  return best;
}

LocalCut probe_search(const Graph& h, const std::vector<char>& term, double phi, std::uint64_t seed) {
  const int n = h.n();
  LocalCut best;
  LocalCut c;
  for (int v = 0; v < n; ++v)
    if (score(h, term, {v}, phi, c)) consider(best, c);
  VertexSet terms;
  for (int v = 0; v < n; ++v)
    if (term[v]) terms.push_back(v);
  const std::int64_t tcount = static_cast<std::int64_t>(terms.size());
  const std::int64_t total_pairs = tcount * (tcount - 1) / 2;
  const std::int64_t budget = config().ed_probe_pairs;
  const std::int64_t stride = std::max<std::int64_t>(1, total_pairs / std::max<std::int64_t>(1, budget));
  std::int64_t idx = 0;
  for (std::int64_t i = 0; i < tcount; ++i)
    for (std::int64_t j = i + 1; j < tcount; ++j, ++idx) {
      if (idx % stride != 0) continue;
      const int a = terms[i], b = terms[j];
      if (h.adjacent(a, b)) continue;
      Separator sep = min_st_separator(h, a, b);
      if (!sep.exists) continue;
      for (int root : {a, b}) {
        VertexCut cut = cut_from_separator(h, sep.vertices, root);
        if (score(h, term, cut.L, phi, c)) consider(best, c);
      }
    }
  // Random balls as a sampled certificate.
  std::mt19937_64 rng(seed);
  for (int t = 0; t < config().ed_samples; ++t) {
    const int root = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n / 2)));
    VertexSet L{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (size_t qi = 0; qi < L.size() && static_cast<int>(L.size()) < target; ++qi)
      for (int y : h.adj(L[qi]))
        if (!seen[y] && static_cast<int>(L.size()) < target) {
          seen[y] = 1;
          L.push_back(y);
        }
    std::sort(L.begin(), L.end());
    if (score(h, term, L, phi, c)) consider(best, c);
  }
  return best;
}

}  // namespace

ExpanderDecomposition expander_decomposition(const Graph& g, const VertexSet& T, double phi) {
  if (T.empty()) throw InvariantError("expander decomposition needs terminals");
  ExpanderDecomposition ed;
  ed.phi = phi;
  ed.budget = std::max<std::int64_t>(config().ed_x_floor,
                                     static_cast<std::int64_t>(config().ed_x_fraction * static_cast<double>(T.size())));
  std::vector<char> in_t(g.n(), 0);
  for (int v : T) in_t[v] = 1;
  std::deque<VertexSet> work;
  for (auto& c : connected_components(g)) work.push_back(c);
  std::vector<std::pair<VertexSet, std::string>> done;
  while (!work.empty()) {
    VertexSet u = std::move(work.front());
    work.pop_front();
    Graph h = g.induced(u);
    std::vector<char> term(u.size(), 0);
    int tcount = 0;
    for (size_t i = 0; i < u.size(); ++i) tcount += term[i] = in_t[u[i]];
    const bool small = static_cast<int>(u.size()) <= config().ed_exhaustive_max;
    LocalCut cut;
    if (tcount >= 2) {
      cut = small ? exhaustive_search(h, term, phi)
                  : probe_search(h, term, phi, config().seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(u.front()));
    }
    if (!cut.found) {
      done.emplace_back(std::move(u), small || tcount < 2 ? "exhaustive" : "sampled");
      continue;
    }
    VertexSet sep;
    for (int v : cut.S) sep.push_back(u[v]);
    std::sort(sep.begin(), sep.end());
    ed.X = set_union(ed.X, sep);
    for (auto& comp : components_avoiding(h, cut.S)) {
      VertexSet mapped;
      for (int v : comp) mapped.push_back(u[v]);
      std::sort(mapped.begin(), mapped.end());
      work.push_back(std::move(mapped));
    }
  }
  std::sort(done.begin(), done.end());
  for (auto& [p, c] : done) {
    ed.pieces.push_back(std::move(p));
    ed.certificates.push_back(std::move(c));
  }
  ed.budget_exceeded = static_cast<std::int64_t>(ed.X.size()) > ed.budget;
  return ed;
}

VertexSet shaving(const Graph& h, const VertexSet& A, int a) {
  if (A.empty()) return {};
  const int n = h.n();
  std::vector<int> count(n, 0);
  for (int x : A)
    for (int y : h.adj(x)) ++count[y];
  const double need = config().tr_shave_fraction * static_cast<double>(A.size());
  std::vector<char> in_core(n, 0);
  std::int64_t core = 0;
  for (int v = 0; v < n; ++v)
    if (static_cast<double>(count[v]) >= need) {
      in_core[v] = 1;
      ++core;
    }
  const double radius = config().tr_shave_radius * a;
  VertexSet r;
  for (int u : A) {
    std::int64_t inter = 0;
    for (int y : h.adj(u)) inter += in_core[y];
    const std::int64_t diff = h.degree(u) + core - 2 * inter;
    if (static_cast<double>(diff) <= radius) r.push_back(u);
  }
  return r;
}

}  // namespace vconn
