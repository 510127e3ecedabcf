#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vconn/graph.hpp"

namespace vconn {

// Symmetric distance oracle over vertex ids.
using DistanceOracle = std::function<std::int64_t(int, int)>;

enum class CandidateEdges { GraphEdges, AllPairs };

// A list of partitions of V; cluster ids are global across partitions.
struct Clustering {
  int n = 0;
  std::vector<std::vector<VertexSet>> partitions;
  std::vector<VertexSet> clusters;            // flattened, partition-major order
  std::vector<int> partition_of;              // cluster id -> partition index
  std::vector<std::vector<int>> membership;   // vertex -> cluster ids, ascending

  void rebuild_index();
};

struct CncStats {
  int max_radius_index = 0;  // largest i reached by the ball-growing loop
  std::int64_t oracle_calls = 0;
};

// Sparse neighborhood cover over the auxiliary graph whose edges are the
// candidate pairs at oracle distance <= d. Roots are the smallest remaining ids.
Clustering cnc(const Graph& g, const DistanceOracle& dist, std::int64_t d, CandidateEdges candidates,
               CncStats* stats = nullptr);

// CNC over all pairs with the weighted out-neighborhood symmetric difference
// and d = 2 * l; returns the flattened cluster list as a Clustering.
Clustering weighted_cnc(const WeightedDigraph& dg, Weight l);

// ---------------------------------------------------------------- sparse recovery

class MixedSketchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SketchFamily;

// Opaque per-vertex digest supporting pairwise symmetric-difference recovery.
struct RecoverySketch {
  std::shared_ptr<const SketchFamily> family;
  int vertex = -1;
};

// Builds one sketch per vertex with recovery threshold x. The backend is
// taken from the configuration ("reference" or "syndrome").
std::vector<RecoverySketch> sketch_construct(const Graph& g, std::int64_t x);
std::vector<RecoverySketch> sketch_construct(const Graph& g, std::int64_t x, const std::string& backend);

// N(u) symmetric-difference N(v) when its size is at most x; nullopt (TooLarge)
// when the backend cannot decode.
std::optional<VertexSet> sketch_recover(const RecoverySketch& a, const RecoverySketch& b);

}  // namespace vconn
