#include "cobisat/timing.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cobisat {

void TimingConfig::validate() const {
  if (t_gtu_us < 0 || t_clamp_us < 0 || t_subq_us < 0 || t_core_us < 0 ||
      t_feedback_us < 0) {
    throw std::invalid_argument("timing: stage latencies must be >= 0");
  }
  if (!(power_w > 0)) throw std::invalid_argument("timing: power_w must be > 0");
  if (axi_bits != 128 && axi_bits != 256 && axi_bits != 512) {
    throw std::invalid_argument("timing: axi_bits must be 128, 256 or 512");
  }
  if (pe_count < 1) throw std::invalid_argument("timing: pe_count must be >= 1");
}

double decomp_latency_us(const TimingConfig& cfg) {
  return cfg.t_gtu_us + std::max(cfg.t_clamp_us, cfg.t_subq_us);
}

double iter_latency_us(const TimingConfig& cfg) {
  if (cfg.mode == TimingMode::kPipelined) {
    return std::max(cfg.t_gtu_us, cfg.t_core_us + cfg.t_feedback_us) +
           std::max(cfg.t_clamp_us, cfg.t_subq_us);
  }
  return decomp_latency_us(cfg) + cfg.t_feedback_us + cfg.t_core_us;
}

double duty_cycle_pct(const TimingConfig& cfg) {
  TimingConfig serial = cfg;
  serial.mode = TimingMode::kSerial;
  const double iter = iter_latency_us(serial);
  if (iter <= 0.0) throw std::domain_error("duty cycle: zero iteration latency");
  return 100.0 * cfg.t_core_us / iter;
}

double energy_mj(const TimingConfig& cfg, double duration_ms) {
  if (duration_ms < 0) throw std::invalid_argument("energy: negative duration");
  return cfg.power_w * duration_ms;
}

TimingConfig scale(const TimingConfig& cfg, int new_axi_bits,
                   int new_pe_count) {
  TimingConfig scaled = cfg;
  scaled.axi_bits = new_axi_bits;
  scaled.pe_count = new_pe_count;
  scaled.validate();
  scaled.t_subq_us =
      cfg.t_subq_us * (static_cast<double>(cfg.axi_bits) / new_axi_bits);
  scaled.t_clamp_us =
      cfg.t_clamp_us * (static_cast<double>(cfg.pe_count) / new_pe_count);
  return scaled;
}

double speedup(double reference_time, double candidate_time) {
  if (!(reference_time > 0) || !(candidate_time > 0)) {
    throw std::invalid_argument("speedup: times must be positive");
  }
  return reference_time / candidate_time;
}

double geomean(std::span<const double> ratios) {
  if (ratios.empty()) throw std::invalid_argument("geomean: empty input");
  double log_sum = 0.0;
  for (const double r : ratios) {
    if (!(r > 0)) throw std::invalid_argument("geomean: non-positive ratio");
    log_sum += std::log(r);
  }
  return std::exp(log_sum / static_cast<double>(ratios.size()));
}

TimingReport make_report(const TimingConfig& cfg,
                         const TimingConfig* reference) {
  cfg.validate();
  TimingReport report;
  report.t_decomp_us = decomp_latency_us(cfg);
  report.t_iter_us = iter_latency_us(cfg);
  report.duty_cycle_pct = duty_cycle_pct(cfg);
  report.time_ms_per_100_iters = report.t_iter_us / 10.0;
  report.energy_mj_per_100_iters =
      energy_mj(cfg, report.time_ms_per_100_iters);
  if (reference != nullptr) {
    report.speedup_vs_reference =
        speedup(iter_latency_us(*reference), report.t_iter_us);
  }
  return report;
}

const std::map<std::string, TimingConfig>& presets() {
  // Stage latencies in us per iteration, from the measured reference
  // systems. The CPU pipeline is sequential and has no published stage
  // split, so its whole decomposition time sits in t_gtu (which also keeps
  // it invariant under scale(), as resource scaling models FPGA datapaths).
  // Where the stage-wise averages disagree with the per-100-iteration
  // breakdown (bram-uf50 and both extddr rows), the stage values are
  // rescaled uniformly so that the decomposition total matches the
  // breakdown's Dec column.
  static const std::map<std::string, TimingConfig> kPresets = {
      {"cpu-pcie-uf20", {115.0, 0.0, 0.0, 77.5, 322.0, 65.0}},
      {"cpu-pcie-uf50", {195.0, 0.0, 0.0, 77.5, 322.0, 65.0}},
      {"fpga-bram-uf20", {3.4, 22.7, 56.3, 77.5, 86.3, 0.73}},
      {"fpga-bram-uf50", {5.98, 34.31, 95.02, 77.5, 112.0, 0.76}},
      {"fpga-extddr-uf20", {3.81, 31.67, 68.99, 77.5, 86.3, 0.80}},
      {"fpga-extddr-uf50", {5.97, 45.65, 117.43, 77.5, 112.0, 0.88}},
  };
  return kPresets;
}

TimingConfig parse_timing_config(std::istream& in) {
  TimingConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq, value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=") {
      throw std::invalid_argument("timing config line " +
                                  std::to_string(line_no) +
                                  ": expected \"key = value\"");
    }
    try {
      if (key == "t_gtu_us") cfg.t_gtu_us = std::stod(value);
      else if (key == "t_clamp_us") cfg.t_clamp_us = std::stod(value);
      else if (key == "t_subq_us") cfg.t_subq_us = std::stod(value);
      else if (key == "t_core_us") cfg.t_core_us = std::stod(value);
      else if (key == "t_feedback_us") cfg.t_feedback_us = std::stod(value);
      else if (key == "power_w") cfg.power_w = std::stod(value);
      else if (key == "axi_bits") cfg.axi_bits = std::stoi(value);
      else if (key == "pe_count") cfg.pe_count = std::stoi(value);
      else if (key == "mode") {
        if (value == "serial") cfg.mode = TimingMode::kSerial;
        else if (value == "pipelined") cfg.mode = TimingMode::kPipelined;
        else throw std::invalid_argument("bad mode");
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("timing config line " +
                                  std::to_string(line_no) + ": bad entry \"" +
                                  key + " = " + value + "\"");
    }
  }
  cfg.validate();
  return cfg;
}

void write_timing_config(const TimingConfig& cfg, std::ostream& out) {
  out << "t_gtu_us = " << cfg.t_gtu_us << '\n'
      << "t_clamp_us = " << cfg.t_clamp_us << '\n'
      << "t_subq_us = " << cfg.t_subq_us << '\n'
      << "t_core_us = " << cfg.t_core_us << '\n'
      << "t_feedback_us = " << cfg.t_feedback_us << '\n'
      << "power_w = " << cfg.power_w << '\n'
      << "axi_bits = " << cfg.axi_bits << '\n'
      << "pe_count = " << cfg.pe_count << '\n'
      << "mode = "
      << (cfg.mode == TimingMode::kPipelined ? "pipelined" : "serial")
      << '\n';
}

std::vector<ProjectionRow> projection_sweep(const TimingConfig& cfg) {
  static constexpr struct {
    const char* name;
    int axi;
    int pe;
  } kSteps[] = {
      {"baseline", 128, 8},   {"axi-256", 256, 8},  {"axi-256-pe-16", 256, 16},
      {"axi-512", 512, 8},    {"axi-512-pe-32", 512, 32},
  };
  const double base_total = decomp_latency_us(cfg);
  std::vector<ProjectionRow> rows;
  rows.reserve(std::size(kSteps));
  for (const auto& step : kSteps) {
    const TimingConfig scaled = scale(cfg, step.axi, step.pe);
    const double total = decomp_latency_us(scaled);
    rows.push_back({step.name, step.axi, step.pe, scaled.t_clamp_us,
                    scaled.t_subq_us, total,
                    total > 0 ? base_total / total : 1.0});
  }
  return rows;
}

std::span<const DecompLatencyRow> reference_decomp_latency() {
  static constexpr DecompLatencyRow kRows[] = {
      {"uf20-01", 0.128, 0.048, 0.068}, {"uf20-02", 0.099, 0.051, 0.063},
      {"uf20-03", 0.100, 0.052, 0.063}, {"uf50-01", 0.183, 0.101, 0.125},
      {"uf50-02", 0.203, 0.110, 0.141}, {"uf50-03", 0.201, 0.102, 0.128},
  };
  return kRows;
}

}  // namespace cobisat
