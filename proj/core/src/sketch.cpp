#include <algorithm>
#include <atomic>

#include "vconn/cnc.hpp"
#include "vconn/config.hpp"

namespace vconn {

namespace {

constexpr std::uint64_t kP = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t r = lo + hi;
  return r >= kP ? r - kP : r;
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}
std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

using Poly = std::vector<std::uint64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j]));
  trim(r);
  return r;
}
Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i]);
  trim(r);
  return r;
}
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(std::max(0, deg(a) - deg(b) + 1), 0);
  std::uint64_t inv = invmod(b.back());
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    std::uint64_t c = mulmod(a.back(), inv);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = submod(a[i + shift], mulmod(c, b[i]));
    trim(a);
  }
  r = a;
  trim(q);
}
std::uint64_t eval(const Poly& p, std::uint64_t x) {
  std::uint64_t r = 0;
  for (size_t i = p.size(); i-- > 0;) r = addmod(mulmod(r, x), p[i]);
  return r;
}

std::atomic<std::uint64_t> next_family_id{1};

// Per-vertex hash folded into a checksum that rejects decodes of differences
// larger than the syndrome capacity.
std::uint64_t fingerprint(int v, std::uint64_t salt) {
  std::uint64_t z = static_cast<std::uint64_t>(v) * 0x9e3779b97f4a7c15ULL + salt;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return (z ^ (z >> 31)) % kP;
}

}  // namespace

struct SketchFamily {
  std::uint64_t id = 0;
  std::int64_t x = 0;
  int n = 0;
  std::string backend;
  std::vector<std::vector<int>> neighborhoods;     // reference backend (owned copy)
  std::vector<std::vector<std::uint64_t>> sums;    // syndrome backend: power sums 1..2x+1
  std::vector<std::uint64_t> checksum;              // syndrome backend: sum of fingerprints
};

std::vector<RecoverySketch> sketch_construct(const Graph& g, std::int64_t x) {
  return sketch_construct(g, x, config().sketch_backend);
}

std::vector<RecoverySketch> sketch_construct(const Graph& g, std::int64_t x, const std::string& backend) {
  if (backend != "reference" && backend != "syndrome")
    throw InvariantError("unknown sketch backend: " + backend);
  auto fam = std::make_shared<SketchFamily>();
  fam->id = next_family_id++;
  fam->x = std::max<std::int64_t>(x, 0);
  fam->n = g.n();
  fam->backend = backend;
  if (backend == "reference") {
    fam->neighborhoods.resize(g.n());
    for (int v = 0; v < g.n(); ++v) fam->neighborhoods[v].assign(g.adj(v).begin(), g.adj(v).end());
  } else {
    const std::int64_t m = 2 * fam->x + 1;
    fam->sums.assign(g.n(), std::vector<std::uint64_t>(m, 0));
    fam->checksum.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
      for (int y : g.adj(v)) {
        fam->checksum[v] = addmod(fam->checksum[v], fingerprint(y, fam->id));
        std::uint64_t e = static_cast<std::uint64_t>(y) + 1, p = e;
        for (std::int64_t j = 0; j < m; ++j) {
          fam->sums[v][j] = addmod(fam->sums[v][j], p);
          p = mulmod(p, e);
        }
      }
  }
  std::vector<RecoverySketch> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = {fam, v};
  return out;
}

namespace {

// Recovers the signed set with power-sum differences c_j = sum_{A} e^j - sum_{B} e^j,
// j = 1..2x+1, via the rational generating function prod(1 - a z) / prod(1 - b z).
// Returns (A - B, B - A).
std::optional<std::pair<VertexSet, VertexSet>> decode(const std::vector<std::uint64_t>& c,
                                                      std::int64_t x, int n) {
  const int m = static_cast<int>(c.size());
  if (m == 0) return std::make_pair(VertexSet{}, VertexSet{});
  // g(z) = -sum c_j z^j / j; f = exp(g) via f' = g' f.
  Poly g(m + 1, 0), f(m + 1, 0);
  for (int j = 1; j <= m; ++j) g[j] = submod(0, mulmod(c[j - 1], invmod(j)));
  f[0] = 1;
  for (int k = 1; k <= m; ++k) {
    std::uint64_t s = 0;
    for (int j = 1; j <= k; ++j) s = addmod(s, mulmod(mulmod(j, g[j]), f[k - j]));
    f[k] = mulmod(s, invmod(k));
  }
  // Pade approximation by the extended Euclidean algorithm on (z^{m+1}, f).
  Poly r0(m + 2, 0);
  r0[m + 1] = 1;
  Poly r1 = f;
  trim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty() && deg(r1) > x) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly t = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  Poly num = r1, den = t1;
  if (num.empty() || den.empty() || den[0] == 0 || deg(den) > x) return std::nullopt;
  // Roots of num are 1/a (a in A - B); roots of den are 1/b (b in B - A).
  VertexSet plus, minus;
  for (int v = 0; v < n; ++v) {
    std::uint64_t inv = invmod(static_cast<std::uint64_t>(v) + 1);
    if (eval(num, inv) == 0) plus.push_back(v);
    if (eval(den, inv) == 0) minus.push_back(v);
  }
  if (static_cast<int>(plus.size()) != deg(num) || static_cast<int>(minus.size()) != deg(den))
    return std::nullopt;
  return std::make_pair(std::move(plus), std::move(minus));
}

}  // namespace

std::optional<VertexSet> sketch_recover(const RecoverySketch& a, const RecoverySketch& b) {
  if (!a.family || !b.family || a.family->id != b.family->id)
    throw MixedSketchError("sketches come from different construct calls");
  const SketchFamily& f = *a.family;
  if (a.vertex == b.vertex) return VertexSet{};
  if (f.backend == "reference") {
    const auto& x = f.neighborhoods[a.vertex];
    const auto& y = f.neighborhoods[b.vertex];
    VertexSet out;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  }
  const auto& sa = f.sums[a.vertex];
  const auto& sb = f.sums[b.vertex];
  std::vector<std::uint64_t> c(sa.size());
  for (size_t j = 0; j < sa.size(); ++j) c[j] = submod(sa[j], sb[j]);
  auto res = decode(c, f.x, f.n);
  if (!res) return std::nullopt;
  auto& [plus, minus] = *res;
  if (static_cast<std::int64_t>(plus.size() + minus.size()) > f.x) return std::nullopt;
  // Every syndrome must be reproduced by the decoded signed set.
  std::vector<std::uint64_t> check(c.size(), 0);
  auto accumulate = [&](const VertexSet& s, bool negative) {
    for (int v : s) {
      std::uint64_t e = static_cast<std::uint64_t>(v) + 1, p = e;
      for (size_t j = 0; j < c.size(); ++j) {
        check[j] = negative ? submod(check[j], p) : addmod(check[j], p);
        p = mulmod(p, e);
      }
    }
  };
  accumulate(plus, false);
  accumulate(minus, true);
  if (check != c) return std::nullopt;
  std::uint64_t sum = 0;
  for (int v : plus) sum = addmod(sum, fingerprint(v, f.id));
  for (int v : minus) sum = submod(sum, fingerprint(v, f.id));
  if (sum != submod(f.checksum[a.vertex], f.checksum[b.vertex])) return std::nullopt;
  return set_union(plus, minus);
}

}  // namespace vconn
