#pragma once

#include <cstdint>
#include <vector>

#include "vconn/graph.hpp"

namespace vconn {

// Per-terminal minimum isolating separators.
struct IsolatingResult {
  VertexSet terminals;
  std::vector<VertexSet> separators;  // C_v, aligned with terminals
  std::vector<VertexCut> cuts;        // (L_v, C_v, rest) in the input graph
  std::int64_t instance_edges = 0;    // edges over all flow instances built
  int rounds = 0;                     // bit-partition flows
};

// For each v in the independent set I (|I| >= 2), a minimum (v, I - v) separator.
IsolatingResult isolating_vertex_cuts(const Graph& g, const VertexSet& I);

// Greedy maximal independent subset of `x`, scanning ids in ascending order.
VertexSet greedy_independent_subset(const Graph& g, const VertexSet& x);

// Minimum cut whenever some cut is balanced with respect to T; otherwise
// some valid cut, or the NoCut sentinel when none was found.
VertexCut balanced_terminal_vc(const Graph& g, const VertexSet& T, int k);

// As above on the subgraph spanned by T and N(T) plus a super-vertex joined to
// N(T); minimum whenever the balanced cut has its small side inside T.
VertexCut subgraph_balanced_terminal_vc(const Graph& g, const VertexSet& T, int k);

}  // namespace vconn
