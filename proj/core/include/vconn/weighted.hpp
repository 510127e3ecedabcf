#pragma once

#include <cstdint>
#include <vector>

#include "vconn/graph.hpp"
#include "vconn/pseudorandom.hpp"

namespace vconn {

// {v : w(N^in(v) ∩ C) <= vhigh_fraction * w(C)}, from one arc scan.
VertexSet identify_vlow(const WeightedDigraph& d, const VertexSet& C);

// Weight bucket of v: the i >= 1 with 2^(i-1) <= w(v) < 2^i.
int weight_bucket(Weight w);

// Union over weight buckets (i, j) of crossing families between C_i and
// (V_low)_j sized from the guesses l ~ w(L) and r ~ w(R).
PairFamily lopsided_pairs(const WeightedDigraph& d, const VertexSet& C, const VertexSet& v_low, Weight l,
                          Weight r);

// A sparsified flow instance on compact ids; `original` maps them back to D.
struct SparsifiedInstance {
  WeightedDigraph graph;
  std::vector<int> original;
  int s = -1;
  int t = -1;
};

// Per-source difference lists N^out(u) - N^out(s) and N^in(u) - N^out(s) for
// every u, so each sparsified instance is assembled in time proportional to
// its size.
class LopsidedIndex {
 public:
  LopsidedIndex(const WeightedDigraph& d, int s);
  int source() const { return s_; }
  const VertexSet& out_minus(int u) const { return out_minus_[u]; }
  const VertexSet& in_minus(int u) const { return in_minus_[u]; }
  bool in_source_out(int v) const { return in_sout_[v] != 0; }

 private:
  int s_;
  std::vector<char> in_sout_;
  std::vector<VertexSet> out_minus_, in_minus_;
};

// Vertices C ∪ N^out(C) ∪ {t}; arcs touching C except those inside N^out(s),
// plus an arc into t from every vertex of N^out(C). Throws InvariantError
// when s is not in C or s == t.
SparsifiedInstance sparsify_lopsided(const WeightedDigraph& d, int s, int t, const VertexSet& C);
SparsifiedInstance sparsify_lopsided(const WeightedDigraph& d, const LopsidedIndex& idx, int t,
                                     const VertexSet& C);

// D without the arcs inside N^out(s) and the arcs inside N^in(t). Same ids.
WeightedDigraph sparsify_symmetric(const WeightedDigraph& d, int s, int t);

// Union over weight buckets (i, j) of symmetric crossing families on V_i ∪ V_j,
// keeping pairs whose source lies in the heavier bucket.
PairFamily symmetric_pairs(const WeightedDigraph& d, Weight l);

struct WeightedStats {
  int guesses = 0;
  int clusters = 0;
  std::int64_t pairs = 0;
  std::int64_t instances = 0;
  std::int64_t instance_edges = 0;
  std::int64_t naive_edges = 0;
  std::int64_t separators = 0;
  std::int64_t invalid = 0;

  void add(const WeightedStats& o);
};

// Cut minimizing over every sparsified instance built from the power-of-2
// guesses. NoCut (without value) when nothing separates.
VertexCut lopsided_vc(const WeightedDigraph& d, WeightedStats* stats = nullptr);
VertexCut symmetric_vc(const WeightedDigraph& d, WeightedStats* stats = nullptr);

struct WeightedRunStats {
  WeightedStats lopsided, symmetric;
};

// Minimum weight vertex cut of a digraph: value 0 when not strongly
// connected, NoCut without value when complete.
VertexCut vertex_connectivity_weighted(const WeightedDigraph& d, WeightedRunStats* stats = nullptr);

}  // namespace vconn
