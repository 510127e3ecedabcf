#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vconn {

struct CounterSnapshot {
  std::uint64_t flow_calls = 0;
  std::uint64_t flow_instance_edges = 0;
  std::uint64_t kernel_graphs = 0;
  std::uint64_t kernel_edges = 0;
  std::uint64_t cluster_memberships = 0;
  std::uint64_t sparsified_instances = 0;
  std::uint64_t sparsified_edges = 0;
  std::uint64_t naive_edges = 0;
  std::uint64_t lopsided_instances = 0;
  std::uint64_t lopsided_edges = 0;
  std::uint64_t lopsided_naive_edges = 0;
  std::uint64_t sparsified_separators = 0;
  std::uint64_t sparsified_invalid = 0;
  std::uint64_t terminal_rounds = 0;
  std::uint64_t terminal_shrink_violations = 0;
  std::uint64_t invalid_intermediate_cuts = 0;
  std::uint64_t fallback_events = 0;

  std::vector<std::pair<std::string, std::uint64_t>> entries() const;
};

// Process-wide counters; every flow and every pipeline stage reports here.
struct Counters {
  std::atomic<std::uint64_t> flow_calls{0};
  std::atomic<std::uint64_t> flow_instance_edges{0};
  std::atomic<std::uint64_t> kernel_graphs{0};
  std::atomic<std::uint64_t> kernel_edges{0};
  std::atomic<std::uint64_t> cluster_memberships{0};
  std::atomic<std::uint64_t> sparsified_instances{0};
  std::atomic<std::uint64_t> sparsified_edges{0};
  std::atomic<std::uint64_t> naive_edges{0};
  std::atomic<std::uint64_t> lopsided_instances{0};
  std::atomic<std::uint64_t> lopsided_edges{0};
  std::atomic<std::uint64_t> lopsided_naive_edges{0};
  std::atomic<std::uint64_t> sparsified_separators{0};
  std::atomic<std::uint64_t> sparsified_invalid{0};
  std::atomic<std::uint64_t> terminal_rounds{0};
  std::atomic<std::uint64_t> terminal_shrink_violations{0};
  std::atomic<std::uint64_t> invalid_intermediate_cuts{0};
  std::atomic<std::uint64_t> fallback_events{0};

  void reset();
  CounterSnapshot snapshot() const;
};

Counters& counters();

// Fallback events (degenerate parameters, certification limits) with a reason.
void note_fallback(const std::string& reason);
std::vector<std::string> fallback_log();
void clear_fallback_log();

}  // namespace vconn
