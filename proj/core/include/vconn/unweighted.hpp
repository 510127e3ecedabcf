#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vconn/graph.hpp"

namespace vconn {

class UndefinedExpansion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact rational num / den in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator==(const Rational& o) const = default;
};

// |S| / min(|T & (L + S)|, |T & (R + S)|). Throws UndefinedExpansion when the min is 0.
Rational terminal_expansion(const Graph& g, const VertexSet& T, const VertexCut& cut);

struct ExpanderDecomposition {
  VertexSet X;
  std::vector<VertexSet> pieces;   // U_list, ordered by smallest member
  double phi = 0;
  bool budget_exceeded = false;    // |X| went past the configured budget
  std::int64_t budget = 0;
  // Per piece: "exhaustive" (every cut checked) or "sampled".
  std::vector<std::string> certificates;
};

// Reference backend: repeatedly removes the separator of a (T, phi)-sparse cut
// found by exhaustive search (pieces <= ed_exhaustive_max vertices) or by
// terminal-pair flow probing and sampling (larger pieces).
ExpanderDecomposition expander_decomposition(const Graph& g, const VertexSet& T, double phi);

// R within A: vertices whose neighborhood is within radius * a of the set of
// vertices seen by at least fraction * |A| members of A.
VertexSet shaving(const Graph& h, const VertexSet& A, int a);

struct TerminalReductionStats {
  int terminals_in = 0;
  int terminals_out = 0;
  int x = 0;
  int t_big = 0;
  int t_small = 0;
  int t_xbar = 0;
  double phi = 0;
  bool budget_exceeded = false;
  int balanced_calls = 0;
  bool trimmed = false;            // the faithful T' broke the 0.9 bound and was cut back
  std::vector<VertexCut> candidates;  // every cut offered to S'
};

struct TerminalReductionResult {
  VertexCut cut;  // S' (NoCut sentinel with value n when nothing was found)
  VertexSet terminals;
  TerminalReductionStats stats;
};

TerminalReductionResult terminal_reduction(const Graph& g, const VertexSet& T, int k);

struct UnbalancedStats {
  int scales = 0;
  std::int64_t pairs = 0;
  std::int64_t clusters = 0;
};

// Minimum cut whenever some minimum cut has |L| <= lambda * delta and |L| <= |R|.
VertexCut unbalanced_vc(const Graph& g, UnbalancedStats* stats = nullptr);

struct UnweightedStats {
  int rounds = 0;
  std::vector<int> terminal_sizes;
  UnbalancedStats unbalanced;
  std::vector<TerminalReductionStats> reductions;
};

VertexCut vertex_connectivity_unweighted(const Graph& g, UnweightedStats* stats = nullptr);

}  // namespace vconn
