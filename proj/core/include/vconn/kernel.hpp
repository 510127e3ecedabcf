#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "vconn/cnc.hpp"
#include "vconn/graph.hpp"
#include "vconn/maxflow.hpp"

namespace vconn {

class EmptyKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cluster index over the low-degree vertices with per-vertex recovery sketches.
struct KernelIndex {
  std::shared_ptr<const Graph> graph;
  int l = 1;
  int delta = 0;
  VertexSet v_low;                       // {v : deg(v) <= c_low * delta}
  std::vector<VertexSet> clusters;       // V_1..V_z in original ids
  std::vector<std::vector<int>> index;   // I_u: cluster ids containing u
  std::vector<RecoverySketch> sketches;  // threshold l * ceil(log2 n)^2
  std::int64_t sketch_threshold = 0;
  int cluster_limit = 0;                 // gate on |V_i| for queries
  CncStats cnc_stats;
};

KernelIndex build_kernel_index(const Graph& g, int l);

// Kernel graph with the local-to-original vertex map.
struct Kernel {
  Graph graph;
  VertexSet vertices;  // local id -> original id, ascending
  int s = -1;          // local ids
  int t = -1;
};

// The kernel on N[V'_i] + {t} with V'_i = V_i - N[t]: s keeps its edges, each
// u in V'_i keeps edges to N(u) - N(s), and N(V'_i) is joined to t.
// Throws EmptyKernel when V'_i is empty.
Kernel kernel_graph(const KernelIndex& idx, int cluster, int s, int t);

struct KernelQuery {
  Weight value = 0;     // n when no kernel yields a separator
  int cluster = -1;     // cluster attaining the value
  VertexCut cut;        // cut of G induced by the kernel separator (NoCut if none)
};

// Upper bound on kappa(s, t) from the kernels of gated clusters containing s.
KernelQuery query_kernel(const KernelIndex& idx, int s, int t);
Weight query_kappa_upper(const KernelIndex& idx, int s, int t);

}  // namespace vconn
