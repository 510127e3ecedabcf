#include "vconn/instrumentation.hpp"

#include <algorithm>
#include <mutex>

namespace vconn {

Counters& counters() {
  static Counters c;
  return c;
}

void Counters::reset() {
  for (auto* a : {&flow_calls, &flow_instance_edges, &kernel_graphs, &kernel_edges,
                  &cluster_memberships, &sparsified_instances, &sparsified_edges, &naive_edges,
                  &lopsided_instances, &lopsided_edges, &lopsided_naive_edges,
                  &sparsified_separators, &sparsified_invalid, &terminal_rounds,
                  &terminal_shrink_violations, &invalid_intermediate_cuts, &fallback_events})
    a->store(0);
}

CounterSnapshot Counters::snapshot() const {
  CounterSnapshot s;
  s.flow_calls = flow_calls.load();
  s.flow_instance_edges = flow_instance_edges.load();
  s.kernel_graphs = kernel_graphs.load();
  s.kernel_edges = kernel_edges.load();
  s.cluster_memberships = cluster_memberships.load();
  s.sparsified_instances = sparsified_instances.load();
  s.sparsified_edges = sparsified_edges.load();
  s.naive_edges = naive_edges.load();
  s.lopsided_instances = lopsided_instances.load();
  s.lopsided_edges = lopsided_edges.load();
  s.lopsided_naive_edges = lopsided_naive_edges.load();
  s.sparsified_separators = sparsified_separators.load();
  s.sparsified_invalid = sparsified_invalid.load();
  s.terminal_rounds = terminal_rounds.load();
  s.terminal_shrink_violations = terminal_shrink_violations.load();
  s.invalid_intermediate_cuts = invalid_intermediate_cuts.load();
  s.fallback_events = fallback_events.load();
  return s;
}

std::vector<std::pair<std::string, std::uint64_t>> CounterSnapshot::entries() const {
  return {{"flow_calls", flow_calls},
          {"flow_instance_edges", flow_instance_edges},
          {"kernel_graphs", kernel_graphs},
          {"kernel_edges", kernel_edges},
          {"cluster_memberships", cluster_memberships},
          {"sparsified_instances", sparsified_instances},
          {"sparsified_edges", sparsified_edges},
          {"naive_edges", naive_edges},
          {"lopsided_instances", lopsided_instances},
          {"lopsided_edges", lopsided_edges},
          {"lopsided_naive_edges", lopsided_naive_edges},
          {"sparsified_separators", sparsified_separators},
          {"sparsified_invalid", sparsified_invalid},
          {"terminal_rounds", terminal_rounds},
          {"terminal_shrink_violations", terminal_shrink_violations},
          {"invalid_intermediate_cuts", invalid_intermediate_cuts},
          {"fallback_events", fallback_events}};
}

namespace {
std::mutex log_mu;
std::vector<std::string>& log_store() {
  static std::vector<std::string> v;
  return v;
}
}  // namespace

void note_fallback(const std::string& reason) {
  counters().fallback_events++;
  std::lock_guard<std::mutex> lock(log_mu);
  auto& v = log_store();
  // Bounded: reports only need the distinct reasons.
  if (v.size() < 256 && std::find(v.begin(), v.end(), reason) == v.end()) v.push_back(reason);
}

std::vector<std::string> fallback_log() {
  std::lock_guard<std::mutex> lock(log_mu);
  return log_store();
}

void clear_fallback_log() {
  std::lock_guard<std::mutex> lock(log_mu);
  log_store().clear();
}

}  // namespace vconn
