#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "vconn/config.hpp"
#include "vconn/gabow.hpp"
#include "vconn/generators.hpp"
#include "vconn/graph.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/oracle.hpp"
#include "vconn/pseudorandom.hpp"
#include "vconn/unweighted.hpp"
#include "vconn/weighted.hpp"

namespace vconn::cli {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// FNV-1a over the input bytes; identifies the input in reports.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

ParsedGraph load(const std::string& path, std::string* bytes = nullptr) {
  std::string text = read_file(path);
  if (bytes) *bytes = text;
  GraphFormat fmt = GraphFormat::EdgeList;
  std::istringstream scan(text);
  for (std::string line; std::getline(scan, line);) {
    std::istringstream ss(line);
    std::string k, w;
    ss >> k;
    if (k != "p") continue;
    ss >> w;
    if (w == "edge" || w == "col") fmt = GraphFormat::Dimacs;
    break;
  }
  std::istringstream in(text);
  return parse_graph(in, fmt);
}

json config_json() {
  json j = json::object();
  for (auto& [k, v] : config().entries()) j[k] = v;
  return j;
}

json counters_json() {
  json j = json::object();
  for (auto& [k, v] : counters().snapshot().entries()) j[k] = v;
  return j;
}

json cut_json(const VertexCut& c) {
  return json{{"L", c.L}, {"S", c.S}, {"R", c.R}};
}

VertexSet read_set(const json& j) {
  VertexSet s = j.get<VertexSet>();
  std::sort(s.begin(), s.end());
  return s;
}

bool is_weighted_input(const ParsedGraph& p) { return p.directed || p.weighted; }

std::string resolve_algo(const std::string& algo, const ParsedGraph& p) {
  if (algo == "auto") return is_weighted_input(p) ? "weighted" : "unweighted";
  static const std::vector<std::string> known{"unweighted", "weighted", "gabow", "unbalanced", "terminal"};
  if (std::find(known.begin(), known.end(), algo) == known.end())
    throw InvariantError("unknown algorithm '" + algo + "'");
  if (algo != "weighted" && is_weighted_input(p))
    throw InvariantError("algorithm '" + algo + "' needs an undirected unweighted graph");
  return algo;
}

struct Outcome {
  VertexCut cut;
  bool complete = false;
  std::optional<bool> k_connected;
  json extra = json::object();
};

Outcome run(const std::string& algo, const ParsedGraph& p, std::optional<int> k) {
  Outcome out;
  if (algo == "weighted") {
    const WeightedDigraph& d = p.digraph;
    out.complete = d.n() >= 1 && d.is_complete();
    WeightedRunStats st;
    out.cut = vertex_connectivity_weighted(d, &st);
    out.extra["lopsided_instances"] = st.lopsided.instances;
    out.extra["symmetric_instances"] = st.symmetric.instances;
    return out;
  }
  const Graph& g = p.graph;
  out.complete = g.n() >= 1 && g.is_complete();
  if (algo == "unweighted") {
    UnweightedStats st;
    out.cut = vertex_connectivity_unweighted(g, &st);
    out.extra["terminal_rounds"] = st.rounds;
    out.extra["terminal_sizes"] = st.terminal_sizes;
  } else if (algo == "gabow") {
    const int kk = k.value_or(std::max(0, g.n() - 1));
    GabowResult r = gabow_vc(g, kk);
    out.k_connected = r.k_connected;
    out.cut = r.cut;
    out.extra["k"] = kk;
    out.extra["passes"] = r.stats.passes;
    out.extra["gap_rounds"] = r.stats.gap_rounds;
    out.extra["rich_branch"] = r.stats.rich_branch;
  } else if (algo == "unbalanced") {
    UnbalancedStats st;
    out.cut = unbalanced_vc(g, &st);
    out.extra["scales"] = st.scales;
    out.extra["pairs"] = st.pairs;
  } else {
    if (g.n() == 0) throw InvariantError("terminal reduction needs a nonempty graph");
    TerminalReductionResult r = terminal_reduction(g, iota_set(g.n()), std::max(1, k.value_or(g.min_degree())));
    out.cut = r.cut;
    out.extra["terminals_in"] = r.stats.terminals_in;
    out.extra["terminals_out"] = r.stats.terminals_out;
    out.extra["trimmed"] = r.stats.trimmed;
  }
  return out;
}

// Oracle comparison block; size-guarded inputs are reported as skipped.
json oracle_json(const ParsedGraph& p, const std::optional<Weight>& value, bool weighted, bool& match) {
  json j;
  try {
    VertexCut truth = weighted ? brute_kappa(p.digraph) : brute_kappa(p.graph);
    std::optional<Weight> want;
    if (truth.is_cut() || truth.has_value) want = truth.value;
    j["value"] = want ? json(*want) : json(nullptr);
    match = want == value;
    j["match"] = match;
  } catch (const SizeGuard& e) {
    j["skipped"] = e.what();
    match = true;
  }
  return j;
}

}  // namespace

int cmd_compute(const ComputeOptions& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string bytes;
  ParsedGraph p = load(o.path, &bytes);
  const std::string algo = resolve_algo(o.algo, p);
  counters().reset();
  clear_fallback_log();
  Outcome r = run(algo, p, o.k);

  json rep;
  rep["schema"] = 1;
  rep["command"] = "compute";
  const int n = p.digraph.n();
  rep["input"] = {{"path", o.path},   {"digest", digest(bytes)},   {"n", n},
                  {"m", p.directed ? p.digraph.m() : p.graph.m()}, {"directed", p.directed},
                  {"weighted", p.weighted}};
  rep["algo"] = algo;
  std::optional<Weight> value;
  if (r.cut.is_cut() || r.cut.has_value) value = r.cut.value;
  if (r.k_connected) {
    rep["k_connected"] = *r.k_connected;
    if (*r.k_connected && !r.complete) value.reset();
  }
  rep["complete"] = r.complete;
  if (r.complete) value = algo == "weighted" ? std::nullopt : std::optional<Weight>(std::max(0, n - 1));
  rep["value"] = value ? json(*value) : json(nullptr);
  rep["cut"] = r.cut.is_cut() ? cut_json(r.cut) : json(nullptr);
  rep["stats"] = r.extra;
  bool match = true;
  if (o.oracle) rep["oracle"] = oracle_json(p, value, algo == "weighted", match);
  rep["counters"] = counters_json();
  rep["fallbacks"] = fallback_log();
  rep["config"] = config_json();
  if (o.timing) rep["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << rep.dump(2) << '\n';
  return match ? kOk : kMismatch;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  ParsedGraph p = load(o.graph_path);
  json rep;
  try {
    rep = json::parse(read_file(o.report_path));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("report is not valid JSON: ") + e.what());
  }
  if (rep.value("schema", 0) != 1) throw ParseError(0, "unsupported report schema");
  const bool weighted = rep.value("algo", std::string()) == "weighted" || is_weighted_input(p);
  const int n = p.digraph.n();

  json res;
  res["schema"] = 1;
  res["command"] = "verify";
  std::vector<std::string> problems;
  std::optional<Weight> value;
  if (!rep["value"].is_null()) value = rep["value"].get<Weight>();

  if (rep.value("complete", false)) {
    const bool complete = weighted ? p.digraph.is_complete() : p.graph.is_complete();
    if (!complete) problems.push_back("report claims a complete graph");
    if (!weighted && value != std::optional<Weight>(std::max(0, n - 1)))
      problems.push_back("complete graph value must be n - 1");
  } else if (!rep["cut"].is_null()) {
    VertexCut c;
    try {
      c.L = read_set(rep["cut"].at("L"));
      c.S = read_set(rep["cut"].at("S"));
      c.R = read_set(rep["cut"].at("R"));
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed cut: ") + e.what());
    }
    VertexSet all = set_union(set_union(c.L, c.S), c.R);
    const size_t parts = c.L.size() + c.S.size() + c.R.size();
    if (all != iota_set(n) || parts != static_cast<size_t>(n)) {
      problems.push_back("L, S, R do not partition the vertex set");
    } else {
      c.value = weighted ? p.digraph.weight_of(c.S) : static_cast<Weight>(c.S.size());
      const bool ok = weighted ? validate_cut(p.digraph, c) : validate_cut(p.graph, c);
      if (!ok) problems.push_back("an edge joins L and R or a side is empty");
      if (value != std::optional<Weight>(c.value))
        problems.push_back("reported value differs from the separator weight " + std::to_string(c.value));
    }
  } else if (!rep.value("k_connected", false)) {
    problems.push_back("report has neither a cut nor a connectivity certificate");
  }

  if (o.oracle) {
    if (rep.contains("k_connected") && rep["k_connected"].get<bool>() && rep["stats"].contains("k")) {
      // Certificate reports carry no value; compare the threshold instead.
      try {
        VertexCut truth = brute_kappa(p.graph);
        const Weight k = rep["stats"]["k"].get<Weight>();
        res["oracle"] = {{"value", truth.value}, {"k", k}};
        if (truth.value < k) problems.push_back("oracle finds a cut below k");
      } catch (const SizeGuard& e) {
        res["oracle"] = {{"skipped", e.what()}};
      }
    } else {
      bool match = true;
      res["oracle"] = oracle_json(p, value, weighted, match);
      if (!match) problems.push_back("oracle value differs from the report");
    }
  }
  res["verdict"] = problems.empty();
  res["problems"] = problems;
  out << res.dump(2) << '\n';
  return problems.empty() ? kOk : kMismatch;
}

namespace {

std::vector<std::vector<int>> read_rows(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

json certificate(const std::string& object, json params, const std::string& property, const CheckResult& r) {
  json j;
  j["schema"] = 1;
  j["object"] = object;
  j["params"] = std::move(params);
  j["property"] = property;
  j["method"] = r.method;
  j["verdict"] = r.verdict;
  j["decided"] = r.decided;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

json skipped(const std::string& object, json params, const std::string& reason) {
  return json{{"schema", 1}, {"object", object}, {"params", std::move(params)}, {"verdict", nullptr},
              {"skipped", reason}};
}

}  // namespace

int cmd_check_pr(const CheckOptions& o, std::ostream& out) {
  json cert;
  const std::string& obj = o.object;
  if (obj == "crossing") {
    if (o.alpha > 0) {
      json params{{"n", o.n}, {"alpha", o.alpha}};
      if (o.n < 3 || o.n > 22) {
        cert = skipped(obj, params, "symmetric check needs 3 <= n <= 22");
      } else {
        PairFamily f = o.family_path.empty() ? symmetric_crossing_family(o.n, o.alpha) : PairFamily(o.n);
        if (!o.family_path.empty()) {
          for (auto& row : read_rows(o.family_path)) {
            if (row.size() != 2) throw ParseError(0, "pair lines need two ids");
            f.add(row[0], row[1]);
          }
          f.finalize();
          f.declared_degree_bound = f.max_degree();
        }
        params["pairs"] = f.size();
        cert = certificate(obj, params, "symmetric crossing", check_symmetric_crossing_family(f, o.n, o.alpha));
      }
    } else {
      VertexSet A, B;
      for (int v = 0; v < o.n; ++v) (v < o.n / 2 ? A : B).push_back(v);
      json params{{"n", o.n}, {"A", A}, {"B", B}, {"l", o.l}, {"r", o.r}};
      if (o.l < 1 || o.r < 1 || o.l > static_cast<int>(A.size()) || o.r > static_cast<int>(B.size())) {
        cert = skipped(obj, params, "need 1 <= l <= |A| and 1 <= r <= |B|");
      } else {
        PairFamily f = asymmetric_crossing_family(A, B, o.l, o.r);
        if (!o.family_path.empty()) {
          f = PairFamily(o.n);
          for (auto& row : read_rows(o.family_path)) {
            if (row.size() != 2) throw ParseError(0, "pair lines need two ids");
            f.add(row[0], row[1]);
          }
          f.finalize();
          f.declared_degree_bound = f.max_degree();
        }
        params["pairs"] = f.size();
        cert = certificate(obj, params, "(A, B, l, r) crossing", check_crossing_family(f, A, B, o.l, o.r));
      }
    }
  } else if (obj == "selector") {
    json params{{"n", o.n}, {"k", o.k}, {"eps", o.eps}};
    if (o.k < 1 || o.n <= 2 * o.k || o.eps <= 0 || o.eps >= 1 || o.n > 16) {
      cert = skipped(obj, params, "need k >= 1, 2k < n <= 16 and 0 < eps < 1");
    } else {
      SubsetFamily f;
      if (o.family_path.empty()) {
        f = build_selector(o.n, o.k, o.eps);
      } else {
        f.n = o.n;
        for (auto& row : read_rows(o.family_path)) {
          std::sort(row.begin(), row.end());
          f.sets.push_back(row);
        }
      }
      params["sets"] = f.sets.size();
      cert = certificate(obj, params, "(k, eps) selector", check_selector(f, o.n, o.k, o.eps));
    }
  } else if (obj == "disperser") {
    const int d = o.d > 0 ? o.d : std::max(1, static_cast<int>(std::ceil(std::log2(std::max(2, o.n)))));
    json params{{"n", o.n}, {"k", o.k}, {"d", d}, {"eps", o.eps}};
    if (o.k < 1 || o.k > o.n || o.eps < 0 || o.eps >= 1) {
      cert = skipped(obj, params, "need 1 <= k <= n and 0 <= eps < 1");
    } else {
      LeftRegularBipartite b = build_disperser(o.n, o.k, d, o.eps);
      params["right"] = b.right;
      cert = certificate(obj, params, "(k, eps) disperser",
                         check_disperser(b, o.k, o.eps, config().disperser_check_budget,
                                         config().disperser_certify != "exact", config().seed));
    }
  } else if (obj == "mixing") {
    const int d = o.d > 0 ? o.d : std::max(1, static_cast<int>(std::ceil(std::sqrt(o.n))));
    json params{{"n", o.n}, {"d", d}};
    if (o.n < 2 || o.n > config().mixing_dense_limit) {
      cert = skipped(obj, params, "need 2 <= n <= mixing_dense_limit");
    } else {
      MixingGraph m = build_mixing_graph(o.n, d);
      const double check = dense_lambda(m.graph);
      CheckResult r;
      r.method = "exhaustive";
      r.verdict = check <= m.lambda + 1e-9 && m.lambda < 1.0;
      if (!r.verdict) r.counterexample = "dense lambda " + std::to_string(check);
      params["degree"] = m.degree;
      params["lambda"] = m.lambda;
      params["backend"] = m.backend;
      cert = certificate(obj, params, "certified second eigenvalue", r);
    }
  } else {
    throw InvariantError("unknown object '" + obj + "'");
  }
  out << cert.dump(2) << '\n';
  if (cert["verdict"].is_null()) return kOk;
  return cert["verdict"].get<bool>() ? kOk : kMismatch;
}

int cmd_bench(const BenchOptions& o, std::ostream& log) {
  std::istringstream suite(read_file(o.suite_path));
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (o.out_path != "-") {
    file.open(o.out_path);
    if (!file) throw ParseError(0, "cannot write " + o.out_path);
    out = &file;
  }
  *out << "row,instance,n,m,algo,value,flow_calls,wall_ms\n";
  int line_no = 0, row = 0;
  for (std::string line; std::getline(suite, line);) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    ParsedGraph p;
    std::string label = kind;
    auto need = [&](auto& x) {
      if (!(ss >> x)) throw ParseError(line_no, "incomplete suite line");
      label += ' ' + std::to_string(x);
    };
    if (kind == "connected" || kind == "mindegree") {
      int n = 0, delta = 0;
      double prob = 0;
      std::uint64_t seed = 0;
      need(n);
      if (!(ss >> prob)) throw ParseError(line_no, "incomplete suite line");
      label += ' ' + std::to_string(prob);
      if (kind == "mindegree") need(delta);
      need(seed);
      p.graph = kind == "connected" ? gen::random_connected(n, prob, seed) : gen::random_min_degree(n, prob, delta, seed);
      p.digraph = WeightedDigraph::from_graph(p.graph);
    } else if (kind == "digraph") {
      int n = 0;
      double prob = 0;
      Weight w = 1;
      std::uint64_t seed = 0;
      need(n);
      if (!(ss >> prob)) throw ParseError(line_no, "incomplete suite line");
      label += ' ' + std::to_string(prob);
      need(w);
      need(seed);
      p.directed = true;
      p.weighted = w > 1;
      p.digraph = gen::random_strong_digraph(n, prob, w, seed);
    } else if (kind == "file") {
      std::string path;
      if (!(ss >> path)) throw ParseError(line_no, "file line needs a path");
      label = path;
      p = load(path);
    } else {
      throw ParseError(line_no, "unknown suite entry '" + kind + "'");
    }
    const std::string algo = resolve_algo(o.algo, p);
    counters().reset();
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r = run(algo, p, std::nullopt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::string value = "complete";
    if (!r.complete) value = r.cut.is_cut() || r.cut.has_value ? std::to_string(r.cut.value) : "none";
    *out << row++ << ",\"" << label << "\"," << p.digraph.n() << ',' << (p.directed ? p.digraph.m() : p.graph.m())
         << ',' << algo << ',' << value << ',' << counters().snapshot().flow_calls << ',' << ms << '\n';
  }
  log << row << " rows\n";
  return kOk;
}

}  // namespace vconn::cli
