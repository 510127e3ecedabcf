#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "vconn/cnc.hpp"
#include "vconn/graph.hpp"
#include "vconn/pseudorandom.hpp"

namespace vconn {

class SizeGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground-truth (s, t) separator computed by a shortest-augmenting-path flow
// that shares no code with the production engine. `separable` is false when
// s has an arc to t.
struct PairKappa {
  bool separable = false;
  Weight value = 0;
  VertexSet separator;
};

PairKappa brute_pair_kappa(const Graph& g, int s, int t);
PairKappa brute_pair_kappa(const WeightedDigraph& d, int s, int t);

// All-pairs connectivity with a witness cut. Disconnected inputs give value 0
// with an empty separator; complete graphs give the NoCut sentinel (value n-1
// unweighted, no value weighted). Guarded to n <= 64 and n <= 24.
VertexCut brute_kappa(const Graph& g);
VertexCut brute_kappa(const WeightedDigraph& d);

// Exhaustive search over separators by increasing size (n <= 18).
Weight subset_kappa(const Graph& g);
// Exhaustive search over separators for weighted digraphs (n <= 16).
Weight subset_kappa(const WeightedDigraph& d);

enum class PlantedKind { Unbalanced, Lopsided, Symmetric, BalancedTerminal };

struct PlantedParams {
  int l = 2;
  int s = 3;
  int r = 20;
  double density = 0.6;
  Weight max_weight = 1;
  int retries = 200;
};

struct PlantedInstance {
  PlantedKind kind = PlantedKind::Unbalanced;
  PlantedParams params;
  std::uint64_t seed = 0;
  bool directed = false;
  Graph graph;               // undirected kinds
  WeightedDigraph digraph;   // every kind (symmetric for undirected ones)
  VertexCut planted;
};

// Instance whose planted cut is verified minimum by brute_kappa; vertex ids
// are shuffled. Throws GenerationFailed after params.retries rejections.
PlantedInstance generate_planted(PlantedKind kind, const PlantedParams& params, std::uint64_t seed);
// Regenerates from the seed and checks the result is identical and still verified.
bool reverify(const PlantedInstance& inst);

// Exhaustive (or sampled above `budget` subsets) check of the (A, B, l, r)
// crossing property plus the declared per-source degree bound.
CheckResult check_crossing_family(const PairFamily& p, const VertexSet& A, const VertexSet& B, int l,
                                  int r, std::uint64_t budget = 5000000);
// Exhaustive over every tri-partition of [n] with |R| >= |L| >= |S| / alpha (n <= 22).
CheckResult check_symmetric_crossing_family(const PairFamily& p, int n, double alpha);
// Exhaustive over disjoint (L, S) with eps*k < |L| <= k and |S| <= k (n <= 16).
CheckResult check_selector(const SubsetFamily& f, int n, int k, double eps);
// Naive enumeration of left k-subsets; independent of the pruned checker.
CheckResult check_disperser_exhaustive(const LeftRegularBipartite& b, int k, double eps,
                                       std::uint64_t budget = 20000000);

struct ClusteringReport {
  bool verdict = true;
  int partitions = 0;
  int partition_bound = 0;
  bool exact_partitions = true;
  int cover_samples = 0;
  int cover_failures = 0;
  std::int64_t max_intra_distance = 0;
  std::int64_t distance_bound = 0;
  std::string counterexample;
};

// Sparse-cover properties: partition count <= c1 * ceil(log2 n), exact
// partitions, cover for `samples` random connected sets of pairwise oracle
// distance <= d, intra-cluster distance <= c2 * d * ceil(log2 n).
ClusteringReport check_clustering(const Graph& g, const Clustering& c, const DistanceOracle& dist,
                                  std::int64_t d, CandidateEdges candidates, double c1, double c2,
                                  int samples, std::uint64_t seed);

}  // namespace vconn
