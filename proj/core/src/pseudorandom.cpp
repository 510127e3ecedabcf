#include "vconn/pseudorandom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "vconn/config.hpp"
#include "vconn/instrumentation.hpp"

namespace vconn {

// ---------------------------------------------------------------- families

void PairFamily::finalize() {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  int hi = universe_;
  for (auto& [u, v] : pairs_) hi = std::max({hi, u + 1, v + 1});
  universe_ = hi;
  degree_.assign(universe_, 0);
  for (auto& p : pairs_) ++degree_[p.first];
}

void PairFamily::merge(const PairFamily& other) {
  pairs_.insert(pairs_.end(), other.pairs_.begin(), other.pairs_.end());
  universe_ = std::max(universe_, other.universe_);
}

int PairFamily::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

namespace {

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ config().seed;
  for (auto p : parts) {
    h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

int pow2_ceil(std::int64_t x) {
  int p = 1;
  while (p < x) p <<= 1;
  return p;
}

int pow2_floor(std::int64_t x) {
  int p = 1;
  while (static_cast<std::int64_t>(p) * 2 <= x) p <<= 1;
  return p;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using Bits = std::vector<std::uint64_t>;

struct BitRows {
  int words = 0;
  std::vector<std::uint64_t> data;
  std::uint64_t* row(int i) { return data.data() + static_cast<size_t>(i) * words; }
  const std::uint64_t* row(int i) const { return data.data() + static_cast<size_t>(i) * words; }
};

int popcount(const std::uint64_t* a, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i]);
  return c;
}

// Depth-first enumeration of k-subsets of `rows` with running unions. The
// callback `stop(union, depth)` returns +1 to prune (all extensions pass), -1
// to report a violation and 0 to continue. Returns false when the node budget
// is exhausted.
struct UnionSearch {
  const BitRows* rows = nullptr;
  int count = 0;
  int k = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint64_t>> stack;
  std::vector<int> chosen;
  bool violated = false;

  template <class Judge>
  bool run(Judge judge) {
    stack.assign(k + 1, std::vector<std::uint64_t>(rows->words, 0));
    chosen.clear();
    return rec(0, 0, judge);
  }

  template <class Judge>
  bool rec(int start, int depth, Judge& judge) {
    if (++nodes > budget) return false;
    int verdict = judge(stack[depth].data(), depth);
    if (verdict > 0) return true;
    if (verdict < 0 && depth == k) {
      violated = true;
      return true;
    }
    if (depth == k) return true;
    for (int i = start; i <= count - (k - depth); ++i) {
      const std::uint64_t* r = rows->row(i);
      auto& next = stack[depth + 1];
      for (int w = 0; w < rows->words; ++w) next[w] = stack[depth][w] | r[w];
      chosen.push_back(i);
      if (!rec(i + 1, depth + 1, judge)) return false;
      if (violated) return true;
      chosen.pop_back();
    }
    return true;
  }
};

std::string describe_set(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- dispersers

CheckResult check_disperser(const LeftRegularBipartite& b, int k, double eps,
                            std::uint64_t budget, bool allow_sampling, std::uint64_t seed) {
  CheckResult res;
  const int n = b.left, nr = b.right;
  if (k > n || nr == 0) {
    res.method = "analytic";
    return res;
  }
  k = std::max(k, 1);
  const int need = static_cast<int>(std::ceil((1.0 - eps) * nr - 1e-9));
  const int y = static_cast<int>(std::floor(eps * nr + 1e-9)) + 1;

  double left_cost = binom(n, k);
  double right_cost = y <= nr ? binom(nr, y) : 0.0;
  if (y > nr) {
    res.method = "analytic";
    return res;
  }

  auto left_check = [&](std::uint64_t node_budget) -> int {
    BitRows rows;
    rows.words = (nr + 63) / 64;
    rows.data.assign(static_cast<size_t>(n) * rows.words, 0);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < b.degree; ++i) rows.row(v)[b.at(v, i) / 64] |= 1ULL << (b.at(v, i) % 64);
    UnionSearch s;
    s.rows = &rows;
    s.count = n;
    s.k = k;
    s.budget = node_budget;
    bool done = s.run([&](const std::uint64_t* u, int depth) {
      int c = popcount(u, rows.words);
      if (c >= need) return 1;
      return depth == k ? -1 : 0;
    });
    if (!done) return 0;
    if (s.violated) {
      res.counterexample = "left set " + describe_set(s.chosen) + " covers fewer than " +
                           std::to_string(need) + " right vertices";
      return -1;
    }
    return 1;
  };

  auto right_check = [&](std::uint64_t node_budget) -> int {
    BitRows rows;
    rows.words = (n + 63) / 64;
    rows.data.assign(static_cast<size_t>(nr) * rows.words, 0);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < b.degree; ++i) rows.row(b.at(v, i))[v / 64] |= 1ULL << (v % 64);
    UnionSearch s;
    s.rows = &rows;
    s.count = nr;
    s.k = y;
    s.budget = node_budget;
    bool done = s.run([&](const std::uint64_t* u, int depth) {
      int avoiders = n - popcount(u, rows.words);
      if (avoiders < k) return 1;
      return depth == y ? -1 : 0;
    });
    if (!done) return 0;
    if (s.violated) {
      res.counterexample = "right set " + describe_set(s.chosen) + " is avoided by at least " +
                           std::to_string(k) + " left vertices";
      return -1;
    }
    return 1;
  };

  int verdict = 0;
  if (left_cost <= right_cost) {
    verdict = left_check(budget);
    res.method = "exhaustive";
    if (verdict == 0) {
      verdict = right_check(budget);
      res.method = "exhaustive-right";
    }
  } else {
    verdict = right_check(budget);
    res.method = "exhaustive-right";
    if (verdict == 0) {
      verdict = left_check(budget);
      res.method = "exhaustive";
    }
  }
  if (verdict != 0) {
    res.verdict = verdict > 0;
    return res;
  }
  if (!allow_sampling) {
    res.decided = false;
    res.method = "none";
    return res;
  }
  res.method = "sampled";
  std::mt19937_64 rng(seed);
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<char> hit(nr);
  for (int t = 0; t < config().disperser_samples; ++t) {
    for (int i = 0; i < k; ++i) std::swap(ids[i], ids[i + rng() % (n - i)]);
    std::fill(hit.begin(), hit.end(), 0);
    int c = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < b.degree; ++j) c += !hit[b.at(ids[i], j)]++ ? 1 : 0;
    if (c < need) {
      std::vector<int> l(ids.begin(), ids.begin() + k);
      std::sort(l.begin(), l.end());
      res.verdict = false;
      res.counterexample = "left set " + describe_set(l) + " covers " + std::to_string(c);
      return res;
    }
  }
  return res;
}

namespace {

int base_degree(std::int64_t n) {
  double d = std::pow(static_cast<double>(log2n(n)), config().disperser_log_exponent);
  return std::max(1, static_cast<int>(std::lround(d)));
}

// Greedy load-balanced left-regular graph: each left vertex takes the d least
// loaded right vertices, ties broken by a seeded key.
std::vector<int> greedy_table(int left, int right, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(left);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> load(right, 0);
  std::vector<int> table(static_cast<size_t>(left) * d);
  std::vector<std::pair<std::pair<int, std::uint64_t>, int>> cand(right);
  for (int v : order) {
    for (int j = 0; j < right; ++j) cand[j] = {{load[j], rng()}, j};
    int take = std::min(d, right);
    std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
    for (int i = 0; i < d; ++i) {
      int r = cand[i % take].second;
      table[static_cast<size_t>(v) * d + i] = r;
      ++load[r];
    }
  }
  return table;
}

}  // namespace

LeftRegularBipartite build_disperser(int n, int k, int d, double eps, int right_size) {
  if (n < 1) throw InvariantError("disperser: empty left side");
  d = std::max(d, 1);
  k = std::max(k, 1);
  if (eps < 0 || eps >= 1) throw InvariantError("disperser: eps outside [0, 1)");
  if (k >= n) {
    LeftRegularBipartite b;
    b.left = n;
    b.right = d;
    b.degree = d;
    b.table.resize(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) b.table[static_cast<size_t>(v) * d + i] = i;
    return b;
  }
  if (eps == 0 && right_size > static_cast<std::int64_t>(d) * k)
    throw ConstructionFailed("disperser: full coverage impossible with right side larger than d*k");

  const Config& cfg = config();
  const int d0 = base_degree(n);
  const int gamma = d <= d0 ? 1 : (d + d0 - 1) / d0;
  const int base_n = n * gamma;
  const int base_k = k * gamma;
  const int np = pow2_ceil(base_n);
  const int kp = pow2_floor(base_k);
  const int db = base_degree(np);
  const int lg = log2n(np);
  int nr = right_size > 0 ? right_size
                          : std::max(1, static_cast<int>(std::floor(kp * db / cfg.disperser_right_divisor)));
  const int floor_nr = right_size > 0 ? right_size
                                      : std::max(1, static_cast<int>(std::floor(
                                                        static_cast<double>(kp) * db / (lg * lg * lg))));
  const bool sampling = cfg.disperser_certify == "sampled";
  std::string last_reason = "no attempt";
  while (nr >= floor_nr) {
    for (int attempt = 0; attempt < cfg.disperser_attempts; ++attempt) {
      std::uint64_t seed = mix_seed({1, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(nr),
                                     static_cast<std::uint64_t>(attempt),
                                     static_cast<std::uint64_t>(std::llround(eps * 1e9))});
      std::vector<int> base = greedy_table(base_n, nr, db, seed);
      LeftRegularBipartite b;
      b.left = n;
      b.right = nr;
      b.degree = gamma * db;
      b.table.resize(static_cast<size_t>(n) * b.degree);
      // Left vertex v contracts base vertices v*gamma .. v*gamma + gamma - 1.
      for (int v = 0; v < n; ++v)
        for (int g = 0; g < gamma; ++g)
          for (int i = 0; i < db; ++i)
            b.table[static_cast<size_t>(v) * b.degree + g * db + i] =
                base[static_cast<size_t>(v * gamma + g) * db + i];
      CheckResult c = check_disperser(b, k, eps, cfg.disperser_check_budget, sampling, seed ^ 0x5eed);
      if (!c.decided) {
        last_reason = "certification budget exceeded";
        break;
      }
      if (c.verdict) return b;
      last_reason = c.counterexample;
    }
    if (right_size > 0) break;
    int next = nr * 3 / 4;
    if (next == nr) --next;
    nr = next;
  }
  throw ConstructionFailed("disperser(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                           "): " + last_reason);
}

// ---------------------------------------------------------------- crossing families

PairFamily complete_pair_family(const VertexSet& A, const VertexSet& B, int universe) {
  PairFamily p(universe);
  for (int a : A)
    for (int b : B)
      if (a != b) p.add(a, b);
  p.backend = "complete";
  p.declared_degree_bound = static_cast<std::int64_t>(B.size());
  p.finalize();
  return p;
}

namespace {

int universe_of(const VertexSet& A, const VertexSet& B) {
  int u = 0;
  if (!A.empty()) u = std::max(u, A.back() + 1);
  if (!B.empty()) u = std::max(u, B.back() + 1);
  return u;
}

// Expands each right vertex of `b` into copies so that the right side has
// exactly `target` vertices; copies of j are assigned consecutive ids.
LeftRegularBipartite duplicate_right(const LeftRegularBipartite& b, int target) {
  const int beta = target / b.right;
  const int extra = target - beta * b.right;
  std::vector<int> first(b.right), copies(b.right);
  int next = 0;
  for (int j = 0; j < b.right; ++j) {
    first[j] = next;
    copies[j] = beta + (j < extra ? 1 : 0);
    next += copies[j];
  }
  // Left degree becomes variable; represent it with the maximum copy count and
  // pad by repeating the first copy (duplicate table entries do not change
  // neighborhoods).
  const int mult = beta + (extra > 0 ? 1 : 0);
  LeftRegularBipartite out;
  out.left = b.left;
  out.right = target;
  out.degree = b.degree * mult;
  out.table.resize(static_cast<size_t>(b.left) * out.degree);
  for (int v = 0; v < b.left; ++v)
    for (int i = 0; i < b.degree; ++i) {
      int j = b.at(v, i);
      for (int c = 0; c < mult; ++c)
        out.table[static_cast<size_t>(v) * out.degree + i * mult + c] = first[j] + std::min(c, copies[j] - 1);
    }
  return out;
}

PairFamily ablr2(const VertexSet& A, const VertexSet& B, int l, int r) {
  const int d0 = base_degree(std::max(A.size(), B.size()));
  const double eps = 1.0 / 8.0;
  LeftRegularBipartite d1 = build_disperser(static_cast<int>(B.size()), r, d0, eps);
  int d2deg = static_cast<int>(std::ceil(static_cast<double>(r) / l * d0));
  LeftRegularBipartite d2 = build_disperser(static_cast<int>(A.size()), l, d2deg, eps);
  if (d1.right >= d2.right)
    d2 = duplicate_right(d2, d1.right);
  else
    d1 = duplicate_right(d1, d2.right);
  const int W = d1.right;

  std::vector<std::vector<int>> d1_in(W);
  std::int64_t total = 0;
  for (int v = 0; v < d1.left; ++v)
    for (int i = 0; i < d1.degree; ++i) d1_in[d1.at(v, i)].push_back(v);
  for (auto& lst : d1_in) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    total += static_cast<std::int64_t>(lst.size());
  }
  // W_small: right vertices of degree at most four times the average.
  const double threshold = 4.0 * static_cast<double>(total) / W;
  std::vector<char> small(W, 0);
  std::int64_t max_small_degree = 0;
  for (int w = 0; w < W; ++w)
    if (static_cast<double>(d1_in[w].size()) <= threshold) {
      small[w] = 1;
      max_small_degree = std::max<std::int64_t>(max_small_degree, d1_in[w].size());
    }

  PairFamily p(universe_of(A, B));
  std::vector<int> mark(B.size(), -1);
  for (int ui = 0; ui < static_cast<int>(A.size()); ++ui) {
    for (int i = 0; i < d2.degree; ++i) {
      int w = d2.at(ui, i);
      if (!small[w]) continue;
      for (int bi : d1_in[w]) {
        if (mark[bi] == ui) continue;
        mark[bi] = ui;
        p.add(A[ui], B[bi]);
      }
    }
  }
  p.backend = "disperser";
  std::int64_t d2_distinct = d2.degree;
  p.declared_degree_bound = std::min<std::int64_t>(static_cast<std::int64_t>(B.size()),
                                                   d2_distinct * max_small_degree);
  return p;
}

}  // namespace

PairFamily asymmetric_crossing_family(const VertexSet& A, const VertexSet& B, int l, int r) {
  const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  const int universe = universe_of(A, B);
  PairFamily p(universe);
  if (na == 0 || nb == 0) {
    p.backend = "empty";
    p.finalize();
    return p;
  }
  l = std::clamp(l, 1, na);
  r = std::clamp(r, 1, nb);
  if (l > r) l = r;
  if (l == na && r == nb) {
    p.add(A[0], B[0]);
    p.backend = "single";
    p.declared_degree_bound = 1;
    p.finalize();
    return p;
  }
  if (r == nb) {
    for (int a : A) p.add(a, B[0]);
    p.backend = "single-target";
    p.declared_degree_bound = 1;
    p.finalize();
    return p;
  }
  VertexSet b2 = B;
  int l2 = l, r2 = r;
  if (2 * r > nb) {
    b2.assign(B.begin(), B.begin() + 2 * (nb - r));
    r2 = nb - r;
    l2 = std::min(nb - r, l);
  }
  PairFamily core = ablr2(A, b2, l2, r2);
  core.finalize();
  core.declared_degree_bound = std::min<std::int64_t>(core.declared_degree_bound, nb);
  if (core.max_degree() > core.declared_degree_bound)
    throw InvariantError("crossing family exceeds its declared degree bound");
  return core;
}

PairFamily symmetric_crossing_family(int n, double alpha) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, std::uint64_t, double, double>, PairFamily> memo;
  alpha = std::clamp(alpha, 1.0, static_cast<double>(std::max(n, 1)));
  const Config& cfg = config();
  auto key = std::make_tuple(n, alpha, cfg.seed, cfg.crossing_slack, cfg.disperser_log_exponent);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  VertexSet V = iota_set(n);
  auto complete = [&] {
    PairFamily c = complete_pair_family(V, V, n);
    c.declared_degree_bound = std::max(0, n - 1);
    return c;
  };
  PairFamily out(n);
  if (alpha >= n || n < 3) {
    out = complete();
  } else {
    std::vector<int> rs;
    for (int p = 1; p <= n; p <<= 1) {
      rs.push_back(p);
      if (n - p >= 1) rs.push_back(n - p);
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::int64_t bound = 0;
    try {
      for (int l = 1; l <= n; l <<= 1)
        for (int r : rs) {
          if (l > r || l + r > n) continue;
          if (static_cast<double>(n - r) / l > cfg.crossing_slack * (alpha + 1) + 1e-9) continue;
          PairFamily part = asymmetric_crossing_family(V, V, l, r);
          bound += part.declared_degree_bound;
          out.merge(part);
        }
      PairFamily cleaned(n);
      for (auto& [u, v] : out.pairs())
        if (u != v) cleaned.add(u, v);
      cleaned.backend = "disperser";
      cleaned.declared_degree_bound = std::min<std::int64_t>(bound, n - 1);
      cleaned.finalize();
      out = std::move(cleaned);
    } catch (const ConstructionFailed& e) {
      note_fallback(std::string("symmetric crossing family: complete fallback (") + e.what() + ")");
      out = complete();
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, out);
  return out;
}

// ---------------------------------------------------------------- unique-neighbor expanders

namespace {

int block_index(int x, int v) {
  int b = std::bit_width(static_cast<unsigned>(v)) - 1;
  int c = (x >> b) & 1 ? x ^ v : x;
  int low = c & ((1 << b) - 1);
  int high = c >> (b + 1);
  return (high << b) | low;
}

}  // namespace

LeftRegularBipartite build_unique_neighbor_expander(int n, int k, double alpha,
                                                    const std::vector<int>& forbidden) {
  if (n < 2 || std::popcount(static_cast<unsigned>(n)) != 1)
    throw InvariantError("unique-neighbor expander: left size must be a power of two >= 2");
  k = std::max(k, 1);
  int d;
  if (alpha >= 1.0) {
    if (k > 1) throw ConstructionFailed("unique-neighbor expander: alpha = 1 needs k = 1");
    d = 1;
  } else {
    d = std::max(1, static_cast<int>(std::ceil((k - 1) / (1.0 - alpha) - 1e-9)));
  }
  std::vector<char> bad(n, 0);
  bad[0] = 1;
  for (int f : forbidden)
    if (f > 0 && f < n) bad[f] = 1;
  std::vector<int> vs;
  for (int v = 1; v < n && static_cast<int>(vs.size()) < d; ++v)
    if (!bad[v]) vs.push_back(v);
  if (static_cast<int>(vs.size()) < d)
    throw ConstructionFailed("unique-neighbor expander: needs " + std::to_string(d) +
                             " difference vectors, only " + std::to_string(vs.size()) + " available");
  LeftRegularBipartite b;
  b.left = n;
  b.degree = d;
  b.right = d * (n / 2);
  b.table.resize(static_cast<size_t>(n) * d);
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < d; ++i)
      b.table[static_cast<size_t>(x) * d + i] = i * (n / 2) + block_index(x, vs[i]);
  return b;
}

CheckResult check_unique_neighbor_expansion_detailed(const LeftRegularBipartite& b, int k,
                                                     double alpha) {
  CheckResult res;
  k = std::min(k, b.left);
  std::vector<int> cnt(b.right, 0);
  auto judge = [&](const std::vector<int>& set) {
    std::int64_t unique = 0;
    for (int x : set)
      for (int i = 0; i < b.degree; ++i) ++cnt[b.at(x, i)];
    for (int x : set)
      for (int i = 0; i < b.degree; ++i) {
        int r = b.at(x, i);
        if (cnt[r] == 1) ++unique;
      }
    for (int x : set)
      for (int i = 0; i < b.degree; ++i) cnt[b.at(x, i)] = 0;
    return static_cast<double>(unique) + 1e-9 >= alpha * b.degree * static_cast<double>(set.size());
  };
  if (b.left <= 20) {
    res.method = "exhaustive";
    for (std::uint32_t mask = 1; mask < (1u << b.left); ++mask) {
      if (std::popcount(mask) > k) continue;
      std::vector<int> set;
      for (int x = 0; x < b.left; ++x)
        if (mask >> x & 1) set.push_back(x);
      if (!judge(set)) {
        res.verdict = false;
        res.counterexample = "left set " + describe_set(set);
        return res;
      }
    }
    return res;
  }
  res.method = "sampled";
  std::mt19937_64 rng(mix_seed({7, static_cast<std::uint64_t>(b.left), static_cast<std::uint64_t>(k)}));
  std::vector<int> ids(b.left);
  std::iota(ids.begin(), ids.end(), 0);
  for (int t = 0; t < config().selector_samples; ++t) {
    int sz = 1 + static_cast<int>(rng() % k);
    for (int i = 0; i < sz; ++i) std::swap(ids[i], ids[i + rng() % (b.left - i)]);
    std::vector<int> set(ids.begin(), ids.begin() + sz);
    std::sort(set.begin(), set.end());
    if (!judge(set)) {
      res.verdict = false;
      res.counterexample = "left set " + describe_set(set);
      return res;
    }
  }
  return res;
}

bool check_unique_neighbor_expansion(const LeftRegularBipartite& b, int k, double alpha) {
  return check_unique_neighbor_expansion_detailed(b, k, alpha).verdict;
}

// ---------------------------------------------------------------- selectors

namespace {

SubsetFamily complete_selector(int n) {
  SubsetFamily f;
  f.n = n;
  f.backend = "complete";
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) f.sets.push_back({a, b});
  return f;
}

}  // namespace

SubsetFamily build_selector(int n, int k, double eps) {
  if (n < 1 || k < 1) throw InvariantError("selector: n and k must be positive");
  if (!(eps > 0 && eps <= 1)) throw InvariantError("selector: eps outside (0, 1]");
  if (n <= 2 * k)
    throw ConstructionFailed("selector: n <= 2k leaves no set of size >= 2 avoiding L and S");
  const Config& cfg = config();
  if (cfg.selector_backend == "complete") return complete_selector(n);

  const int np = std::max(2, pow2_ceil(n));
  const int kp = 4 * k;
  const double epsp = eps / 8;
  // Padding element x >= n duplicates x - n; forbid differences that pair an
  // element with its own duplicate.
  std::vector<int> forbidden;
  for (int x = n; x < np; ++x) forbidden.push_back(x ^ (x - n));
  SubsetFamily f;
  try {
    LeftRegularBipartite b = build_unique_neighbor_expander(np, kp, 1 - 2 * epsp, forbidden);
    if (static_cast<std::uint64_t>(b.right) > cfg.selector_budget)
      throw ConstructionFailed("selector: family exceeds the size budget");
    CheckResult c = check_unique_neighbor_expansion_detailed(b, std::min(kp, np), 1 - 2 * epsp);
    if (!c.verdict) throw ConstructionFailed("selector: expansion certificate failed: " + c.counterexample);
    std::vector<std::vector<int>> members(b.right);
    for (int x = 0; x < np; ++x)
      for (int i = 0; i < b.degree; ++i) members[b.at(x, i)].push_back(x < n ? x : x - n);
    f.n = n;
    f.backend = "expander";
    for (auto& m : members) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      if (m.size() < 2) throw InvariantError("selector produced a set of size < 2");
      f.sets.push_back(std::move(m));
    }
    std::sort(f.sets.begin(), f.sets.end());
    f.sets.erase(std::unique(f.sets.begin(), f.sets.end()), f.sets.end());
    return f;
  } catch (const ConstructionFailed& e) {
    if (cfg.selector_backend != "auto") throw;
    note_fallback(std::string("selector: complete fallback (") + e.what() + ")");
    return complete_selector(n);
  }
}

// ---------------------------------------------------------------- mixing graphs

bool MixingGraph::guarantees_edge(std::int64_t a, std::int64_t b) const {
  if (a < 1 || b < 1) return false;
  if (complete) return true;
  double bound = lambda * graph.n();
  return static_cast<double>(a) * static_cast<double>(b) > bound * bound * (1 + 1e-9);
}

double MixingGraph::constant_c() const { return lambda * std::sqrt(static_cast<double>(degree)) / 2; }

namespace {

// Largest nontrivial |eigenvalue| / degree of the circulant graph on Z_n with
// connection set S (each s < n/2 adds +-s, s = n/2 adds one neighbor).
double circulant_lambda(int n, const std::vector<int>& gens, int degree) {
  double worst = 0;
  for (int j = 1; j < n; ++j) {
    double mu = 0;
    for (int s : gens) {
      if (2 * s == n)
        mu += (j % 2) ? -1.0 : 1.0;
      else
        mu += 2 * std::cos(2 * std::numbers::pi * static_cast<double>(j) * s / n);
    }
    worst = std::max(worst, std::abs(mu));
  }
  return worst / degree;
}

}  // namespace

double dense_lambda(const Graph& g) {
  const int n = g.n();
  if (n < 2) return 0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.adj(u)) a(u, v) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  auto ev = es.eigenvalues();  // ascending; the largest is the degree
  double deg = ev(n - 1);
  if (deg <= 0) return 0;
  double worst = std::max(std::abs(ev(0)), std::abs(ev(n - 2)));
  return worst / deg;
}

double power_iteration_lambda(const Graph& g, int iterations, std::uint64_t seed) {
  const int n = g.n();
  if (n < 2) return 0;
  const double deg = g.degree(0);
  if (deg == 0) return 0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXd x(n), y(n);
  for (int i = 0; i < n; ++i) x(i) = nd(rng);
  // Power iteration on A^2 restricted to the complement of the all-ones vector
  // converges to the largest |eigenvalue| there.
  auto project = [&](Eigen::VectorXd& v) { v.array() -= v.mean(); };
  auto apply = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) {
    for (int u = 0; u < n; ++u) {
      double s = 0;
      for (int v : g.adj(u)) s += in(v);
      out(u) = s;
    }
  };
  project(x);
  x.normalize();
  double est = 0;
  Eigen::VectorXd z(n);
  for (int it = 0; it < iterations; ++it) {
    apply(x, y);
    apply(y, z);
    project(z);
    double nz = z.norm();
    if (nz == 0) return 0;
    est = std::sqrt(x.dot(z));
    x = z / nz;
  }
  return est / deg;
}

MixingGraph build_mixing_graph(int n, int d) {
  if (n < 2) throw InvariantError("mixing graph needs n >= 2");
  d = std::clamp(d, 1, n - 1);
  MixingGraph out;
  if (d >= n - 1 || (d == n - 2 && n % 2 == 1)) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    out.graph = Graph::from_edges(n, e);
    out.degree = n - 1;
    out.lambda = 1.0 / (n - 1);
    out.complete = true;
    out.backend = "complete";
    return out;
  }
  // Odd degree needs the antipodal generator, which exists only for even n.
  int target = d;
  if (target % 2 == 1 && n % 2 == 1) ++target;
  const bool antipodal = target % 2 == 1;
  const int half = (n - 1) / 2;  // generators s with 2s < n
  const int want = target / 2;
  std::vector<int> gens;
  if (antipodal) gens.push_back(n / 2);
  std::vector<char> used(half + 1, 0);
  std::mt19937_64 rng(mix_seed({11, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)}));
  for (int step = 0; step < want; ++step) {
    std::vector<int> cand;
    for (int s = 1; s <= half; ++s)
      if (!used[s]) cand.push_back(s);
    if (cand.size() > 64) {
      std::shuffle(cand.begin(), cand.end(), rng);
      cand.resize(64);
      std::sort(cand.begin(), cand.end());
    }
    int best = -1;
    double best_l = 1e18;
    int cur_deg = static_cast<int>(antipodal) + 2 * (step + 1);
    for (int s : cand) {
      gens.push_back(s);
      double l = circulant_lambda(n, gens, cur_deg);
      gens.pop_back();
      if (l < best_l - 1e-12) {
        best_l = l;
        best = s;
      }
    }
    used[best] = 1;
    gens.push_back(best);
  }
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int s : gens) {
      int v = (u + s) % n;
      if (2 * s == n && v < u) continue;
      e.emplace_back(std::min(u, v), std::max(u, v));
    }
  out.graph = Graph::from_edges_dedup(n, e);
  out.degree = target;
  out.lambda = circulant_lambda(n, gens, target);
  out.backend = "circulant";
  if (n <= config().mixing_dense_limit) {
    double check = dense_lambda(out.graph);
    if (std::abs(check - out.lambda) > 1e-6)
      throw ConstructionFailed("mixing graph: spectral certificate mismatch");
    out.lambda = std::max(out.lambda, check);
  }
  return out;
}

}  // namespace vconn
