#include "vconn/graph.hpp"

#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace vconn {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n) : n_(n), off_(static_cast<size_t>(n) + 1, 0) { finish(); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> both;
  both.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvariantError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvariantError("self-loop at " + std::to_string(u));
    both.emplace_back(u, v);
    both.emplace_back(v, u);
  }
  std::sort(both.begin(), both.end());
  for (size_t i = 1; i < both.size(); ++i)
    if (both[i] == both[i - 1])
      throw InvariantError("duplicate edge (" + std::to_string(both[i].first) + "," +
                           std::to_string(both[i].second) + ")");
  Graph g;
  g.n_ = n;
  g.off_.assign(static_cast<size_t>(n) + 1, 0);
  for (auto& e : both) ++g.off_[e.first + 1];
  for (int v = 0; v < n; ++v) g.off_[v + 1] += g.off_[v];
  g.nbr_.resize(both.size());
  for (size_t i = 0; i < both.size(); ++i) g.nbr_[i] = both[i].second;
  g.finish();
  return g;
}

Graph Graph::from_edges_dedup(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [](const auto& e) { return e.first == e.second; }),
              edges.end());
  return from_edges(n, edges);
}

void Graph::finish() {
  m_ = static_cast<std::int64_t>(nbr_.size()) / 2;
  min_deg_ = 0;
  min_deg_vertex_ = -1;
  for (int v = 0; v < n_; ++v) {
    if (min_deg_vertex_ < 0 || degree(v) < min_deg_) {
      min_deg_ = degree(v);
      min_deg_vertex_ = v;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  auto a = adj(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_complete() const {
  return m_ == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& vs) const {
  std::vector<int> pos(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (size_t i = 0; i < vs.size(); ++i)
    for (int w : adj(vs[i]))
      if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
  return from_edges(static_cast<int>(vs.size()), es);
}

WeightedDigraph WeightedDigraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                                           std::vector<Weight> weights) {
  if (weights.empty()) weights.assign(static_cast<size_t>(n), 1);
  if (static_cast<int>(weights.size()) != n) throw InvariantError("weight vector size mismatch");
  WeightedDigraph d;
  d.n_ = n;
  for (Weight w : weights) {
    if (w < 1) throw InvariantError("vertex weight must be >= 1");
    d.max_w_ = std::max(d.max_w_, w);
  }
  if (n > 0 && d.max_w_ > (std::numeric_limits<Weight>::max() - 1) / n)
    throw InvariantError("n * W overflows 64-bit weights");
  for (Weight w : weights) d.total_w_ += w;
  d.w_ = std::move(weights);
  std::vector<std::pair<int, int>> a = arcs;
  for (auto [u, v] : a) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvariantError("arc out of range");
    if (u == v) throw InvariantError("self-loop at " + std::to_string(u));
  }
  std::sort(a.begin(), a.end());
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] == a[i - 1])
      throw InvariantError("duplicate arc (" + std::to_string(a[i].first) + "," +
                           std::to_string(a[i].second) + ")");
  d.out_off_.assign(static_cast<size_t>(n) + 1, 0);
  d.in_off_.assign(static_cast<size_t>(n) + 1, 0);
  for (auto [u, v] : a) {
    ++d.out_off_[u + 1];
    ++d.in_off_[v + 1];
  }
  for (int v = 0; v < n; ++v) {
    d.out_off_[v + 1] += d.out_off_[v];
    d.in_off_[v + 1] += d.in_off_[v];
  }
  d.out_nbr_.resize(a.size());
  d.in_nbr_.resize(a.size());
  std::vector<int> fill(d.in_off_.begin(), d.in_off_.end() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    d.out_nbr_[i] = a[i].second;
    d.in_nbr_[fill[a[i].second]++] = a[i].first;
  }
  // `a` is sorted by (tail, head), so each in-list is filled in tail order.
  return d;
}

WeightedDigraph WeightedDigraph::from_graph(const Graph& g, std::vector<Weight> weights) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<size_t>(2 * g.m()));
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.adj(u)) arcs.emplace_back(u, v);
  return from_arcs(g.n(), arcs, std::move(weights));
}

bool WeightedDigraph::has_arc(int u, int v) const {
  auto a = out(u);
  return std::binary_search(a.begin(), a.end(), v);
}

Weight WeightedDigraph::weight_of(const VertexSet& a) const {
  Weight s = 0;
  for (int v : a) s += w_[v];
  return s;
}

bool WeightedDigraph::is_complete() const {
  return m() == static_cast<std::int64_t>(n_) * (n_ - 1);
}

std::vector<std::pair<int, int>> WeightedDigraph::arcs() const {
  std::vector<std::pair<int, int>> out_arcs;
  out_arcs.reserve(out_nbr_.size());
  for (int u = 0; u < n_; ++u)
    for (int v : out(u)) out_arcs.emplace_back(u, v);
  return out_arcs;
}

WeightedDigraph WeightedDigraph::reversed() const {
  std::vector<std::pair<int, int>> r;
  r.reserve(out_nbr_.size());
  for (int u = 0; u < n_; ++u)
    for (int v : out(u)) r.emplace_back(v, u);
  return from_arcs(n_, r, w_);
}

VertexCut VertexCut::none(Weight value) {
  VertexCut c;
  c.no_cut = true;
  c.value = value;
  return c;
}

VertexCut VertexCut::none_without_value() {
  VertexCut c;
  c.no_cut = true;
  c.has_value = false;
  return c;
}

bool cut_less(const VertexCut& a, const VertexCut& b) {
  if (a.no_cut != b.no_cut) return !a.no_cut;
  if (a.value != b.value) return a.value < b.value;
  return a.S < b.S;
}

void keep_better(VertexCut& best, const VertexCut& candidate) {
  if (cut_less(candidate, best)) best = candidate;
}

namespace {

std::vector<int> read_ids(std::istringstream& ss) {
  std::vector<int> ids;
  std::string tok;
  while (ss >> tok) {
    if (tok == "/") break;
    ids.push_back(std::stoi(tok));
  }
  return ids;
}

// "cut L: 0 1 / S: 2 / R: 3 4"
VertexCut parse_cut_line(const std::string& rest, int line) {
  VertexCut c;
  std::string norm;
  for (char ch : rest) {
    if (ch == '/') norm += " / ";
    else norm += ch;
  }
  std::istringstream ss(norm);
  std::string label;
  int seen = 0;
  while (ss >> label) {
    VertexSet* dst = nullptr;
    if (label == "L:") dst = &c.L;
    else if (label == "S:") dst = &c.S;
    else if (label == "R:") dst = &c.R;
    else throw ParseError(line, "bad cut annotation label '" + label + "'");
    try {
      *dst = read_ids(ss);
    } catch (const std::exception&) {
      throw ParseError(line, "bad vertex id in cut annotation");
    }
    std::sort(dst->begin(), dst->end());
    ++seen;
  }
  if (seen != 3) throw ParseError(line, "cut annotation needs L:, S: and R:");
  c.value = static_cast<Weight>(c.S.size());
  return c;
}

long long parse_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

ParsedGraph parse_graph(std::istream& in, GraphFormat format) {
  ParsedGraph out;
  std::string raw;
  int line = 0;
  int header_line = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Weight> weights;
  bool dimacs = format == GraphFormat::Dimacs;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ss(raw);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "cut") {
      std::string rest;
      std::getline(ss, rest);
      out.planted = parse_cut_line(rest, line);
      continue;
    }
    if (kind == "p") {
      if (n >= 0) throw ParseError(line, "duplicate header");
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (dimacs) {
        if (toks.size() != 3) throw ParseError(line, "expected 'p edge <n> <m>'");
        n = parse_int(toks[1], line);
        m = parse_int(toks[2], line);
      } else {
        if (toks.size() != 3) throw ParseError(line, "expected 'p <n> <m> <u|d>'");
        n = parse_int(toks[0], line);
        m = parse_int(toks[1], line);
        if (toks[2] == "d") out.directed = true;
        else if (toks[2] != "u") throw ParseError(line, "direction flag must be 'u' or 'd'");
      }
      if (n < 0 || m < 0 || n > (1 << 26)) throw ParseError(line, "bad header sizes");
      weights.assign(static_cast<size_t>(n), 1);
      header_line = line;
      continue;
    }
    if (n < 0) throw ParseError(line, "record before header");
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (kind == "e" || kind == "a") {
      if (toks.size() != 2) throw ParseError(line, "edge needs two endpoints");
      long long u = parse_int(toks[0], line), v = parse_int(toks[1], line);
      if (dimacs) {
        --u;
        --v;
      }
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line, "vertex id out of range");
      if (u == v) throw ParseError(line, "self-loop");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else if (kind == "w" || (dimacs && kind == "n")) {
      if (toks.size() != 2) throw ParseError(line, "weight line needs vertex and weight");
      long long v = parse_int(toks[0], line), w = parse_int(toks[1], line);
      if (dimacs) --v;
      if (v < 0 || v >= n) throw ParseError(line, "vertex id out of range");
      if (w < 1) throw ParseError(line, "weight must be positive");
      weights[static_cast<size_t>(v)] = w;
      out.weighted = true;
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError(line, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  int nn = static_cast<int>(n);
  if (out.directed) {
    out.digraph = WeightedDigraph::from_arcs(nn, edges, weights);
  } else {
    out.graph = Graph::from_edges(nn, edges);
    out.digraph = WeightedDigraph::from_graph(out.graph, weights);
  }
  if (out.planted) {
    for (const VertexSet* part : {&out.planted->L, &out.planted->S, &out.planted->R})
      for (int v : *part)
        if (v < 0 || v >= nn) throw ParseError(line, "cut annotation id out of range");
    if (out.directed || out.weighted) out.planted->value = out.digraph.weight_of(out.planted->S);
  }
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  GraphFormat fmt = GraphFormat::EdgeList;
  // DIMACS headers read "p edge" / "p col".
  std::string first;
  std::streampos start = f.tellg();
  while (std::getline(f, first)) {
    std::istringstream ss(first);
    std::string k, w;
    ss >> k;
    if (k == "p") {
      ss >> w;
      if (w == "edge" || w == "col") fmt = GraphFormat::Dimacs;
      break;
    }
  }
  f.clear();
  f.seekg(start);
  return parse_graph(f, fmt);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.n() << ' ' << g.m() << " u\n";
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_digraph(std::ostream& out, const WeightedDigraph& d) {
  out << "p " << d.n() << ' ' << d.m() << " d\n";
  for (auto [u, v] : d.arcs()) out << "e " << u << ' ' << v << '\n';
  for (int v = 0; v < d.n(); ++v)
    if (d.weight(v) != 1) out << "w " << v << ' ' << d.weight(v) << '\n';
}

void write_cut_annotation(std::ostream& out, const VertexCut& cut) {
  auto dump = [&](const char* label, const VertexSet& s) {
    out << label;
    for (int v : s) out << ' ' << v;
  };
  out << "cut ";
  dump("L:", cut.L);
  out << " / ";
  dump("S:", cut.S);
  out << " / ";
  dump("R:", cut.R);
  out << '\n';
}

int symdiff_size(const Graph& g, int u, int v) {
  if (u == v) return 0;
  auto a = g.adj(u), b = g.adj(v);
  size_t i = 0, j = 0;
  int common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<int>(a.size() + b.size()) - 2 * common;
}

Weight weighted_symdiff(const WeightedDigraph& d, int u, int v) {
  if (u == v) return 0;
  auto a = d.out(u), b = d.out(v);
  size_t i = 0, j = 0;
  Weight s = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) s += d.weight(a[i++]);
    else if (i == a.size() || b[j] < a[i]) s += d.weight(b[j++]);
    else {
      ++i;
      ++j;
    }
  }
  return s;
}

Graph ni_sparsify(const Graph& g, int k) {
  if (k < 1) throw InvariantError("ni_sparsify requires k >= 1");
  int n = g.n();
  // Scan-first search: repeatedly scan the unscanned vertex with the largest
  // label r (ties by smallest id); each edge to an unscanned neighbor y joins
  // forest r(y)+1 and increments r(y).
  std::vector<int> r(static_cast<size_t>(n), 0);
  std::vector<char> scanned(static_cast<size_t>(n), 0);
  std::priority_queue<std::pair<int, int>> pq;
  for (int v = 0; v < n; ++v) pq.emplace(0, -v);
  std::vector<std::pair<int, int>> kept;
  while (!pq.empty()) {
    auto [rv, negx] = pq.top();
    pq.pop();
    int x = -negx;
    if (scanned[x] || rv != r[x]) continue;
    scanned[x] = 1;
    for (int y : g.adj(x)) {
      if (scanned[y]) continue;
      ++r[y];
      if (r[y] <= k) kept.emplace_back(x, y);
      pq.emplace(r[y], -y);
    }
  }
  return Graph::from_edges_dedup(n, kept);
}

namespace {

bool partition_ok(int n, const VertexCut& c) {
  if (c.no_cut) return false;
  if (c.L.empty() || c.R.empty()) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const VertexSet* part : {&c.L, &c.S, &c.R})
    for (int v : *part) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  return c.L.size() + c.S.size() + c.R.size() == static_cast<size_t>(n);
}

}  // namespace

bool validate_cut(const Graph& g, const VertexCut& cut) {
  if (!partition_ok(g.n(), cut)) return false;
  std::vector<char> inR(static_cast<size_t>(g.n()), 0);
  for (int v : cut.R) inR[v] = 1;
  for (int u : cut.L)
    for (int v : g.adj(u))
      if (inR[v]) return false;
  return true;
}

bool validate_cut(const WeightedDigraph& d, const VertexCut& cut) {
  if (!partition_ok(d.n(), cut)) return false;
  std::vector<char> inR(static_cast<size_t>(d.n()), 0);
  for (int v : cut.R) inR[v] = 1;
  for (int u : cut.L)
    for (int v : d.out(u))
      if (inR[v]) return false;
  return true;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& a) {
  std::vector<char> mark(static_cast<size_t>(g.n()), 0);
  for (int v : a) mark[v] = 1;
  VertexSet out;
  for (int v : a)
    for (int w : g.adj(v))
      if (!mark[w]) {
        mark[w] = 2;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet set_neighborhood(const WeightedDigraph& d, const VertexSet& a, Direction dir) {
  std::vector<char> mark(static_cast<size_t>(d.n()), 0);
  for (int v : a) mark[v] = 1;
  VertexSet out;
  for (int v : a)
    for (int w : dir == Direction::Out ? d.out(v) : d.in(v))
      if (!mark[w]) {
        mark[w] = 2;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
  int n = g.n();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  for (int v : removed) comp[v] = -2;
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.adj(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_avoiding(g, {}); }

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

std::vector<VertexSet> strongly_connected_components(const WeightedDigraph& d) {
  // Iterative Tarjan.
  int n = d.n();
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> on(static_cast<size_t>(n), 0);
  std::vector<int> st;
  std::vector<VertexSet> out;
  int counter = 0;
  std::vector<std::pair<int, size_t>> call;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    call.emplace_back(s, 0);
    index[s] = low[s] = counter++;
    st.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      auto nb = d.out(v);
      if (it < nb.size()) {
        int w = nb[it++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          st.push_back(w);
          on[w] = 1;
          call.emplace_back(w, 0);
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexSet comp;
        int w;
        do {
          w = st.back();
          st.pop_back();
          on[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return out;
}

bool is_strongly_connected(const WeightedDigraph& d) {
  return d.n() <= 1 || strongly_connected_components(d).size() == 1;
}

VertexCut cut_from_separator(const Graph& g, const VertexSet& separator, int s) {
  int n = g.n();
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (int v : separator) mark[v] = 2;
  std::vector<int> stack{s};
  mark[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj(v))
      if (!mark[w]) {
        mark[w] = 1;
        stack.push_back(w);
      }
  }
  VertexCut c;
  for (int v = 0; v < n; ++v) {
    if (mark[v] == 1) c.L.push_back(v);
    else if (mark[v] == 2) c.S.push_back(v);
    else c.R.push_back(v);
  }
  c.value = static_cast<Weight>(c.S.size());
  return c;
}

VertexCut cut_from_separator(const WeightedDigraph& d, const VertexSet& separator, int s) {
  int n = d.n();
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (int v : separator) mark[v] = 2;
  std::vector<int> stack{s};
  mark[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : d.out(v))
      if (!mark[w]) {
        mark[w] = 1;
        stack.push_back(w);
      }
  }
  VertexCut c;
  for (int v = 0; v < n; ++v) {
    if (mark[v] == 1) c.L.push_back(v);
    else if (mark[v] == 2) c.S.push_back(v);
    else c.R.push_back(v);
  }
  c.value = d.weight_of(c.S);
  return c;
}

VertexCut disconnected_cut(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() < 2) throw InvariantError("graph is connected");
  VertexCut c;
  c.L = comps[0];
  c.R = complement(g.n(), c.L);
  c.value = 0;
  return c;
}

VertexCut neighborhood_cut(const Graph& g, int v) {
  VertexCut c;
  c.L = {v};
  c.S.assign(g.adj(v).begin(), g.adj(v).end());
  VertexSet closed = set_union(c.L, c.S);
  c.R = complement(g.n(), closed);
  if (c.R.empty()) return VertexCut::none(g.n() - 1);
  c.value = static_cast<Weight>(c.S.size());
  return c;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& a, int v) { return std::binary_search(a.begin(), a.end(), v); }

VertexSet complement(int n, const VertexSet& a) {
  VertexSet out;
  size_t j = 0;
  for (int v = 0; v < n; ++v) {
    while (j < a.size() && a[j] < v) ++j;
    if (j < a.size() && a[j] == v) continue;
    out.push_back(v);
  }
  return out;
}

VertexSet iota_set(int n) {
  VertexSet out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace vconn
