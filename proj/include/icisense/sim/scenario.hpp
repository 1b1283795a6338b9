#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icisense/channel/channel.hpp"
#include "icisense/gesture/label.hpp"
#include "icisense/lte/types.hpp"
#include "icisense/rx/estimators.hpp"

namespace icisense::sim {

enum class Method { Pbch, Crs, CrsSs };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

enum class Discovery { Sic, Genie };

struct GestureSchedule {
  std::vector<gesture::GestureLabel> labels{gesture::kGestures.begin(), gesture::kGestures.end()};
  int trials_per_label = 50;
  double capture_s = 2.5;
  double start_s = 0.5;
  double duration_s = 1.0;
  double pause_s = 0.3;
  double ramp_s = 0.1;
  double peak_doppler_min_hz = 8.0;  // drawn uniformly per trial
  double peak_doppler_max_hz = 16.0;

  std::size_t capture_frames() const;
};

struct SweepAxis {
  std::string name;  // duty, sir, snr or kl
  std::vector<double> values;
};

struct BenchConfig {
  std::string metric = "nmse";  // nmse or accuracy
  int frames = 200;
  int seeds = 4;
  int trials_per_label = 10;
  std::vector<SweepAxis> sweeps;
};

struct Scenario {
  std::string name = "default";
  int n_rb = 100;
  lte::FrameStructure structure;
  std::vector<lte::CellConfig> cells;
  int serving_pci = 252;
  std::optional<double> sir_db;  // rescales neighbours, keeping their offsets
  channel::ChannelSpec channel;
  GestureSchedule gestures;
  std::vector<Method> methods = {Method::Pbch, Method::Crs, Method::CrsSs};
  rx::JointLsConfig joint;
  int crs_ss_count = 100;
  Discovery discovery = Discovery::Sic;
  int discovery_frames = 4;
  BenchConfig bench;
  std::uint64_t seed = 1;
  std::string output_dir = "out";

  std::size_t n_sc() const { return static_cast<std::size_t>(n_rb) * lte::kSubcarriersPerRb; }
  int serving_index() const;
  /// Cells with the SIR override applied.
  std::vector<lte::CellConfig> effective_cells() const;
  void validate() const;
};

/// Four cells at the living-room R1 power offsets, full neighbour load.
Scenario default_scenario();

/// Sets neighbour powers so that serving / sum(neighbours) equals sir_db.
std::vector<lte::CellConfig> apply_sir(std::vector<lte::CellConfig> cells, int serving, double sir_db);

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses YAML; every error names the 1-based line of the offending node.
Scenario parse_scenario(const std::string& text, const std::string& source = "<scenario>");
Scenario load_scenario(const std::string& path);

/// 64-bit FNV-1a, used for manifest config hashes.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace icisense::sim
