#include "vconn/config.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include "vconn/graph.hpp"

namespace vconn {

namespace {

using Field = std::variant<int*, double*, std::uint64_t*, std::string*>;

std::vector<std::pair<std::string, Field>> fields(Config& c) {
  return {
      {"jobs", &c.jobs},
      {"seed", &c.seed},
      {"lambda", &c.lambda},
      {"terminal.eps", &c.terminal_eps},
      {"terminal.switch", &c.terminal_switch},
      {"kernel.c_low", &c.c_low},
      {"kernel.cluster_gate", &c.cluster_gate},
      {"cnc.c1", &c.cnc_c1},
      {"cnc.c2", &c.cnc_c2},
      {"disperser.log_exponent", &c.disperser_log_exponent},
      {"disperser.right_divisor", &c.disperser_right_divisor},
      {"disperser.attempts", &c.disperser_attempts},
      {"disperser.check_budget", &c.disperser_check_budget},
      {"disperser.certify", &c.disperser_certify},
      {"disperser.samples", &c.disperser_samples},
      {"crossing.slack", &c.crossing_slack},
      {"selector.backend", &c.selector_backend},
      {"selector.budget", &c.selector_budget},
      {"selector.samples", &c.selector_samples},
      {"mixing.c", &c.mixing_c},
      {"mixing.dense_limit", &c.mixing_dense_limit},
      {"ed.phi", &c.ed_phi},
      {"ed.x_fraction", &c.ed_x_fraction},
      {"ed.x_floor", &c.ed_x_floor},
      {"ed.exhaustive_max", &c.ed_exhaustive_max},
      {"ed.probe_pairs", &c.ed_probe_pairs},
      {"ed.samples", &c.ed_samples},
      {"tr.big_threshold", &c.tr_big_threshold},
      {"tr.xlow_factor", &c.tr_xlow_factor},
      {"tr.cnc_factor", &c.tr_cnc_factor},
      {"tr.shave_fraction", &c.tr_shave_fraction},
      {"tr.shave_radius", &c.tr_shave_radius},
      {"tr.shrink", &c.tr_shrink},
      {"sketch.backend", &c.sketch_backend},
      {"weighted.lambda", &c.weighted_lambda},
      {"weighted.vhigh_fraction", &c.vhigh_fraction},
      {"instrumentation.ratio", &c.instrumentation_ratio},
  };
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
  for (auto& [name, field] : fields(*this)) {
    if (name != key) continue;
    try {
      std::visit(
          [&](auto* p) {
            using T = std::remove_pointer_t<decltype(p)>;
            size_t pos = 0;
            if constexpr (std::is_same_v<T, int>) *p = std::stoi(value, &pos);
            else if constexpr (std::is_same_v<T, double>) *p = std::stod(value, &pos);
            else if constexpr (std::is_same_v<T, std::uint64_t>) *p = std::stoull(value, &pos);
            else {
              *p = value;
              pos = value.size();
            }
            if (pos != value.size()) throw std::invalid_argument(value);
          },
          field);
    } catch (const std::exception&) {
      throw InvariantError("bad value for config key '" + key + "': " + value);
    }
    if (key == "selector.backend" && selector_backend != "auto" && selector_backend != "expander" &&
        selector_backend != "complete")
      throw InvariantError("selector.backend must be auto, expander or complete");
    if (key == "disperser.certify" && disperser_certify != "exact" && disperser_certify != "sampled")
      throw InvariantError("disperser.certify must be exact or sampled");
    if (key == "sketch.backend" && sketch_backend != "reference" && sketch_backend != "syndrome")
      throw InvariantError("sketch.backend must be reference or syndrome");
    return;
  }
  throw InvariantError("unknown config key '" + key + "'");
}

void Config::load_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvariantError("config line without '=': " + line);
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void Config::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvariantError("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  load_text(ss.str());
}

std::vector<std::pair<std::string, std::string>> Config::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  auto& self = const_cast<Config&>(*this);
  for (auto& [name, field] : fields(self)) {
    std::string v = std::visit(
        [](auto* p) -> std::string {
          using T = std::remove_pointer_t<decltype(p)>;
          if constexpr (std::is_same_v<T, double>) return format_double(*p);
          else if constexpr (std::is_same_v<T, std::string>) return *p;
          else return std::to_string(*p);
        },
        field);
    out.emplace_back(name, v);
  }
  return out;
}

Config& config() {
  static Config instance;
  return instance;
}

}  // namespace vconn
