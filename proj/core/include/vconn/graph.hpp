#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vconn {

using Weight = std::int64_t;
// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Undirected simple graph in CSR form with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InvariantError on self-loops, out-of-range ids or duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Same, but silently drops duplicates; used by internal builders.
  static Graph from_edges_dedup(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  std::int64_t m() const { return m_; }
  std::span<const int> adj(int v) const {
    return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  bool adjacent(int u, int v) const;
  int min_degree() const { return min_deg_; }
  // Smallest id attaining the minimum degree; -1 when n = 0.
  int min_degree_vertex() const { return min_deg_vertex_; }
  bool is_complete() const;
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by `vs`; vertex i of the result is vs[i].
  Graph induced(const VertexSet& vs) const;

 private:
  void finish();

  int n_ = 0;
  std::int64_t m_ = 0;
  int min_deg_ = 0;
  int min_deg_vertex_ = -1;
  std::vector<int> off_{0};
  std::vector<int> nbr_;
};

// Directed graph with positive integer vertex weights.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  // Throws InvariantError on self-loops, bad ids, duplicate arcs, weights < 1
  // or when n * W overflows 64 bits.
  static WeightedDigraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                                   std::vector<Weight> weights);
  static WeightedDigraph from_graph(const Graph& g, std::vector<Weight> weights = {});

  int n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(out_nbr_.size()); }
  std::span<const int> out(int v) const {
    return {out_nbr_.data() + out_off_[v], out_nbr_.data() + out_off_[v + 1]};
  }
  std::span<const int> in(int v) const {
    return {in_nbr_.data() + in_off_[v], in_nbr_.data() + in_off_[v + 1]};
  }
  bool has_arc(int u, int v) const;
  Weight weight(int v) const { return w_[v]; }
  const std::vector<Weight>& weights() const { return w_; }
  Weight max_weight() const { return max_w_; }
  Weight total_weight() const { return total_w_; }
  Weight weight_of(const VertexSet& a) const;
  bool is_complete() const;
  std::vector<std::pair<int, int>> arcs() const;
  WeightedDigraph reversed() const;

 private:
  int n_ = 0;
  Weight max_w_ = 0;
  Weight total_w_ = 0;
  std::vector<int> out_off_{0}, out_nbr_;
  std::vector<int> in_off_{0}, in_nbr_;
  std::vector<Weight> w_;
};

// Tri-partition (L, S, R) with no edge from L to R. `no_cut` marks the
// sentinel used for complete graphs; `has_value` is false only for the
// weighted complete-digraph sentinel.
struct VertexCut {
  VertexSet L, S, R;
  Weight value = 0;
  bool no_cut = false;
  bool has_value = true;

  static VertexCut none(Weight value);
  static VertexCut none_without_value();
  bool is_cut() const { return !no_cut; }
};

// Order used for every min-reduction: real cuts before sentinels, then by
// value, then lexicographically by separator.
bool cut_less(const VertexCut& a, const VertexCut& b);
void keep_better(VertexCut& best, const VertexCut& candidate);

enum class GraphFormat { EdgeList, Dimacs };

struct ParsedGraph {
  bool directed = false;
  bool weighted = false;
  Graph graph;                // valid when !directed
  WeightedDigraph digraph;    // always valid (symmetric when undirected)
  std::optional<VertexCut> planted;
};

ParsedGraph parse_graph(std::istream& in, GraphFormat format = GraphFormat::EdgeList);
ParsedGraph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_digraph(std::ostream& out, const WeightedDigraph& d);
void write_cut_annotation(std::ostream& out, const VertexCut& cut);

int symdiff_size(const Graph& g, int u, int v);
Weight weighted_symdiff(const WeightedDigraph& d, int u, int v);

// Union of the first k scan-first-search forests.
Graph ni_sparsify(const Graph& g, int k);

bool validate_cut(const Graph& g, const VertexCut& cut);
bool validate_cut(const WeightedDigraph& d, const VertexCut& cut);

enum class Direction { Out, In };
VertexSet set_neighborhood(const Graph& g, const VertexSet& a);
VertexSet set_neighborhood(const WeightedDigraph& d, const VertexSet& a, Direction dir);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);
bool is_strongly_connected(const WeightedDigraph& d);
std::vector<VertexSet> strongly_connected_components(const WeightedDigraph& d);

// Cut whose L is the component of s in G - S; R is everything else.
VertexCut cut_from_separator(const Graph& g, const VertexSet& separator, int s);
// L = vertices reachable from s in D - S.
VertexCut cut_from_separator(const WeightedDigraph& d, const VertexSet& separator, int s);
// Cut for a disconnected graph: L = first component, S = empty.
VertexCut disconnected_cut(const Graph& g);
// Cut of value deg(v): L = {v}, S = N(v). Requires N[v] != V.
VertexCut neighborhood_cut(const Graph& g, int v);

// Sorted-set helpers.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
VertexSet complement(int n, const VertexSet& a);
VertexSet iota_set(int n);

inline int ceil_log2(std::int64_t x) {
  int r = 0;
  while ((std::int64_t{1} << r) < x) ++r;
  return r;
}
// max(1, ceil(log2 n)): the logarithm used by every size formula.
inline int log2n(std::int64_t n) { return std::max(1, ceil_log2(n)); }

}  // namespace vconn
