#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "vconn/graph.hpp"

namespace vconn {

// Result of a minimum vertex-separator query. `exists` is false for the
// NoSeparator sentinel (a source adjacent to a sink).
struct Separator {
  bool exists = false;
  Weight value = 0;
  VertexSet vertices;
};

// Read-only view of a directed, vertex-capacitated flow instance. Undirected
// graphs list every edge in both directions.
struct FlowGraphView {
  int n = 0;
  std::int64_t edges = 0;
  std::function<std::span<const int>(int)> out;
  std::function<Weight(int)> capacity;
  bool unit = false;
};

FlowGraphView flow_view(const Graph& g);
FlowGraphView flow_view(const WeightedDigraph& d);

// Minimum separator between uncapacitated source and sink sets, realized as
// the saturated split arcs on the source-reachable residual frontier.
Separator min_vertex_separator(const FlowGraphView& g, const VertexSet& sources,
                               const VertexSet& sinks);

Separator min_st_separator(const Graph& g, int s, int t);
Separator min_st_separator(const WeightedDigraph& d, int s, int t);
// Separator between s and a super-sink joined to every vertex of T; the
// separator avoids T. NoSeparator when s is adjacent to T.
Separator min_s_to_set_separator(const Graph& g, int s, const VertexSet& T);
Separator min_set_separator(const Graph& g, const VertexSet& sources, const VertexSet& sinks);

struct RootedResult {
  Weight value = 0;
  VertexCut cut;  // NoCut sentinel when no valid cut exists
};

// min over t outside N[a] of kappa(a, t), with the achieving cut (A, C, B), a in A.
RootedResult rooted_connectivity(const Graph& g, int a);
// Rooted connectivity of a new vertex joined to T: the smallest vertex cut of G
// whose separator may use T and whose far side holds every surviving terminal.
// NoCut when no such cut exists.
RootedResult weak_separator(const Graph& g, const VertexSet& T);

}  // namespace vconn
