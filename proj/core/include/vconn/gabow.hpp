#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vconn/graph.hpp"

namespace vconn {

// Raised when a gap round finds a vertex with no non-neighbor to patch.
class Exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// T is tau-rich when some minimum cut has at least tau vertices of T on each side.
struct RichSet {
  VertexSet T;
  int tau = 0;
};

struct RichOrCut {
  bool is_cut = false;
  VertexCut cut;    // valid cut of size < k when is_cut
  RichSet rich;     // certified rich set otherwise (under kappa < k)
  std::string branch;  // "dense", "rooted", "neighborhood", "weak-separator", "separator"
};

// One rooted connectivity query from a minimum-degree vertex plus at most two
// weak separators; tau = floor((delta - k) / 2).
RichOrCut rich_set_or_cut(const Graph& g, int k);

// H is a compacted subgraph of G plus safe edges; ids maps H to G and every
// removed vertex lies in each minimum cut of G unless `best` is below k.
struct GapState {
  Graph h;
  std::vector<int> ids;
  VertexSet removed;
  VertexCut best;  // always a valid cut of the original graph
  int gap = 0;     // gap rounds applied
  int original_n = 0;
};

// H = G, best = the minimum-degree neighborhood cut (NoCut for complete G).
GapState initial_gap_state(const Graph& g);
// Removes the smallest-id vertex and patches the degrees it lowered with
// edges certified by pair flows. Throws Exhausted when H is complete or a
// vertex has no non-neighbor.
GapState increase_gap(const GapState& state, int k);

struct GabowStats {
  int passes = 0;
  int gap_rounds = 0;
  int removed = 0;
  int mixing_degree = 0;
  std::int64_t expander_pairs = 0;
  std::string rich_branch;
  bool tau_fallback = false;
};

// `k_connected` means no separator smaller than k exists (for the complete
// graph: n - 1 >= k); otherwise `cut` is a valid cut of size < k.
struct GabowResult {
  bool k_connected = false;
  VertexCut cut;
  GabowStats stats;
};

// Rich set or cut, then a flow across every edge of a mixing graph on T.
GabowResult large_gap_vc(const Graph& h, int k, int gamma);
// Single decision pass: a cut of size < k or a certificate that none exists.
GabowResult gabow_decide(const Graph& g, int k);
// Decision passes with k lowered to each cut found, so a returned cut is minimum.
GabowResult gabow_vc(const Graph& g, int k);

}  // namespace vconn
