#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace vconn::cli {

// Process exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kMismatch = 1, kParse = 2, kInvariant = 3 };

struct ComputeOptions {
  std::string path;
  std::string algo = "auto";  // auto, unweighted, weighted, gabow, unbalanced, terminal
  std::optional<int> k;       // gabow threshold; defaults to n - 1 (exact value)
  bool oracle = false;
  bool timing = true;         // include wall_time_ms
};

struct VerifyOptions {
  std::string graph_path;
  std::string report_path;
  bool oracle = false;
};

struct CheckOptions {
  std::string object;  // crossing, selector, disperser, mixing
  int n = 8;
  int k = 2;
  int l = 1;
  int r = 1;
  int d = 0;
  double eps = 0.5;
  double alpha = 0.0;  // > 0 selects the symmetric crossing family
  std::string family_path;
};

struct BenchOptions {
  std::string suite_path;
  std::string out_path;  // "-" for stdout
  std::string algo = "auto";
};

int cmd_compute(const ComputeOptions& o, std::ostream& out);
int cmd_verify(const VerifyOptions& o, std::ostream& out);
int cmd_check_pr(const CheckOptions& o, std::ostream& out);
int cmd_bench(const BenchOptions& o, std::ostream& log);

}  // namespace vconn::cli
