#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vconn/graph.hpp"

namespace vconn {

class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d-left-regular bipartite (multi)graph given by its neighbor table.
struct LeftRegularBipartite {
  int left = 0;
  int right = 0;
  int degree = 0;
  std::vector<int> table;  // table[v * degree + i] = i-th neighbor of v

  int at(int v, int i) const { return table[static_cast<size_t>(v) * degree + i]; }
};

// Ordered pairs (source, target) without duplicates, with a per-source degree index.
class PairFamily {
 public:
  PairFamily() = default;
  explicit PairFamily(int universe) : universe_(universe) {}

  void add(int u, int v) { pairs_.emplace_back(u, v); }
  // Sorts, removes duplicates and builds the degree index.
  void finalize();
  void merge(const PairFamily& other);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  int universe() const { return universe_; }
  int degree(int u) const { return u < static_cast<int>(degree_.size()) ? degree_[u] : 0; }
  int max_degree() const;

  // Degree bound implied by the construction (checked against the index).
  std::int64_t declared_degree_bound = 0;
  std::string backend;

 private:
  int universe_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> degree_;
};

struct SubsetFamily {
  int n = 0;
  std::vector<VertexSet> sets;
  std::string backend;
};

// Regular graph on exactly n vertices with a certified bound `lambda` on the
// largest nontrivial adjacency eigenvalue in absolute value, divided by the degree.
struct MixingGraph {
  Graph graph;
  int degree = 0;
  double lambda = 1.0;
  bool complete = false;
  std::string backend;

  // True when the mixing inequality forces an edge between any disjoint sets
  // of these sizes.
  bool guarantees_edge(std::int64_t a, std::int64_t b) const;
  // Constant c with |A||B|d >= 4 c^2 n^2 implying an edge.
  double constant_c() const;
};

struct CheckResult {
  bool verdict = true;
  bool decided = true;  // false when the size budget prevented a full check
  std::string method;   // "exhaustive", "exhaustive-right", "sampled", "analytic"
  std::string counterexample;
};

// (k, eps)-disperser: every left set of size >= k reaches >= (1-eps) n_R right vertices.
// right_size = 0 selects the default sizing.
LeftRegularBipartite build_disperser(int n, int k, int d, double eps, int right_size = 0);
CheckResult check_disperser(const LeftRegularBipartite& b, int k, double eps,
                            std::uint64_t budget, bool allow_sampling, std::uint64_t seed);

// Family crossing every (L, R) with L subset of A, R subset of B, |L| >= l, |R| >= r.
PairFamily asymmetric_crossing_family(const VertexSet& A, const VertexSet& B, int l, int r);
PairFamily complete_pair_family(const VertexSet& A, const VertexSet& B, int universe);
// Family over [n] crossing every tri-partition with |R| >= |L| >= |S| / alpha.
PairFamily symmetric_crossing_family(int n, double alpha);

// (n, k, eps)-selector; every set has at least two elements.
SubsetFamily build_selector(int n, int k, double eps);
// Bipartite graph over {0,1}^N (N = log2 n) whose i-th neighbor function is
// the linear map with kernel {0, v_i}; certified (k, alpha) unique-neighbor expander.
LeftRegularBipartite build_unique_neighbor_expander(int n, int k, double alpha,
                                                    const std::vector<int>& forbidden = {});
bool check_unique_neighbor_expansion(const LeftRegularBipartite& b, int k, double alpha);
CheckResult check_unique_neighbor_expansion_detailed(const LeftRegularBipartite& b, int k,
                                                     double alpha);

MixingGraph build_mixing_graph(int n, int d);
// Largest nontrivial |eigenvalue| / degree of a regular graph, by dense eigensolve.
double dense_lambda(const Graph& g);
// Same quantity by power iteration on the deflated adjacency operator.
double power_iteration_lambda(const Graph& g, int iterations, std::uint64_t seed);

}  // namespace vconn
