#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vconn {

// Every constant left unspecified by the algorithms. Loaded from key=value
// text; the effective values are printed into each CLI report.
struct Config {
  int jobs = 1;
  std::uint64_t seed = 1;

  // Unbalanced case: l ranges up to 2^ceil(log(delta * log n)); lambda bound.
  double lambda = 8.0;
  // Balanced-terminal epsilon and the Branch A/B switch (Branch B when k/eps > |T|/switch).
  double terminal_eps = 0.25;
  double terminal_switch = 4.0;
  // Kernel: V_low = {deg <= c_low * delta}; cluster gate |V_i| <= gate * delta * log n.
  double c_low = 8.0;
  double cluster_gate = 8.0;

  // CNC acceptance constants.
  double cnc_c1 = 1.0;
  double cnc_c2 = 170.0;

  // Dispersers: base degree ceil(log2 n)^exponent, right size k*d/divisor.
  double disperser_log_exponent = 1.0;
  double disperser_right_divisor = 2.0;
  int disperser_attempts = 6;
  std::uint64_t disperser_check_budget = 4000000;
  // "exact" accepts only exhaustive certificates; "sampled" also accepts sampling.
  std::string disperser_certify = "exact";
  int disperser_samples = 20000;
  // Symmetric family: (n - r) / l <= slack * (alpha + 1).
  double crossing_slack = 4.0;

  // Selectors: "auto" (expander, complete fallback), "expander", "complete".
  std::string selector_backend = "auto";
  std::uint64_t selector_budget = 1u << 22;
  int selector_samples = 20000;

  // Mixing graphs: initial constant c in d = 1 + 4 (c t)^2 / (rho rho').
  double mixing_c = 1.0;
  int mixing_dense_limit = 2048;

  // Expander decomposition reference backend.
  double ed_phi = 0.25;
  double ed_x_fraction = 0.01;
  int ed_x_floor = 1;
  int ed_exhaustive_max = 16;
  int ed_probe_pairs = 400;
  int ed_samples = 2000;

  // Terminal reduction constants.
  double tr_big_threshold = 5.0;
  double tr_xlow_factor = 1000.0;
  double tr_cnc_factor = 15.0;
  double tr_shave_fraction = 0.1;
  double tr_shave_radius = 2.2;
  double tr_shrink = 0.9;

  // Sparse recovery backend: "reference" or "syndrome".
  std::string sketch_backend = "reference";

  // Weighted pipeline.
  double weighted_lambda = 8.0;
  double vhigh_fraction = 0.9;

  // Soft instrumentation threshold (sparsified edges / naive edges).
  double instrumentation_ratio = 0.5;

  // Throws InvariantError on unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
  void load_text(const std::string& text);
  void load_file(const std::string& path);
  std::vector<std::pair<std::string, std::string>> entries() const;
};

// Process-wide configuration read by the library.
Config& config();

// Restores the previous configuration on destruction.
class ScopedConfig {
 public:
  ScopedConfig() : saved_(config()) {}
  ~ScopedConfig() { config() = saved_; }
  ScopedConfig(const ScopedConfig&) = delete;
  ScopedConfig& operator=(const ScopedConfig&) = delete;

 private:
  Config saved_;
};

}  // namespace vconn
