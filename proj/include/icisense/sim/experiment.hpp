#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icisense/channel/channel.hpp"
#include "icisense/dsp/dsp.hpp"
#include "icisense/gesture/classifier.hpp"
#include "icisense/lte/cell.hpp"
#include "icisense/rx/search.hpp"
#include "icisense/sim/scenario.hpp"

namespace icisense::sim {

/// Symbols the estimators read: CRS symbol 0 and the PBCH symbols 7-10.
lte::SymbolMask estimation_mask();
/// PBCH symbols restricted to the central 72 subcarriers.
channel::SynthBand pbch_band(std::size_t n_sc);

/// Frame-by-frame synthesis of one capture: every cell, every antenna,
/// with payload and noise seeded per frame so any symbol mask reproduces
/// the same samples.
class CaptureSynth {
 public:
  CaptureSynth(const Scenario& scenario, std::vector<lte::CellConfig> cells,
               std::optional<channel::GestureScript> gesture, std::uint64_t seed, std::size_t n_frames);

  std::size_t n_frames() const { return real_->n_frames(); }
  std::size_t n_sc() const { return n_sc_; }
  int sfn_base() const { return sfn_base_; }
  const std::vector<lte::CellConfig>& cells() const { return cells_; }
  const channel::ChannelRealization& channel() const { return *real_; }

  /// Capture frames [first, first + count) at one antenna.
  lte::ResourceGrid frames(std::size_t first, std::size_t count, int antenna, const lte::SymbolMask& mask) const;
  /// One capture frame at the first `antennas` antennas (0 = all); `out` is
  /// reused between calls.
  void frame_all(std::size_t frame, const lte::SymbolMask& mask, std::vector<lte::ResourceGrid>& out,
                 int antennas = 0, const channel::SynthBand* band = nullptr) const;
  /// Perfectly known cell list (identities, ports, MIB fields, SFN).
  std::vector<rx::KnownCell> genie_cells() const;

 private:
  const std::vector<lte::CellTransmitter>& transmitters(const lte::SymbolMask& mask) const;

  lte::FrameStructure structure_;
  std::size_t n_sc_;
  std::vector<lte::CellConfig> cells_;
  std::uint64_t seed_;
  int sfn_base_;
  std::unique_ptr<channel::ChannelRealization> real_;
  void map_cells(std::size_t frame, const lte::SymbolMask& mask) const;

  mutable std::vector<std::pair<lte::SymbolMask, std::vector<lte::CellTransmitter>>> tx_cache_;
  mutable std::vector<lte::CellFrame> tx_frames_;
};

struct MethodResult {
  Method method = Method::Pbch;
  dsp::DopplerTrack f1, f2;
  gesture::GestureLabel predicted = gesture::GestureLabel::None;
};

struct TrialOutcome {
  gesture::GestureLabel truth = gesture::GestureLabel::None;
  int index = 0;
  double peak_doppler_hz = 0.0;
  std::vector<rx::CellInfo> discovered;
  double cfo_hz = 0.0;
  bool serving_found = false;
  std::vector<MethodResult> methods;
};

std::uint64_t trial_seed(std::uint64_t scenario_seed, gesture::GestureLabel label, int index);
channel::GestureScript trial_script(const Scenario& scenario, gesture::GestureLabel label, std::uint64_t seed);

/// Cell list for the estimators: SIC on the first frames of antenna 0, or
/// the genie list.
struct DiscoveryResult {
  std::vector<rx::CellInfo> cells;
  double cfo_hz = 0.0;
};
DiscoveryResult discover(const Scenario& scenario, const CaptureSynth& synth);

/// Per-antenna CSI of the serving cell over the whole capture.
struct CaptureCsi {
  std::vector<rx::CsiSeries> pbch;        // port 0, antennas 0..3
  std::vector<rx::CsiSeries> pbch_port1;  // serving port 1 when present
  std::vector<rx::CsiSeries> crs;         // port 0, antennas 0..3
};
CaptureCsi estimate_capture(const Scenario& scenario, const CaptureSynth& synth,
                            const std::vector<rx::KnownCell>& cells, const lte::CellIdentity& serving,
                            double cfo_hz, bool want_pbch, bool want_crs);
/// Same from recorded multi-frame grids, one per receive antenna.
CaptureCsi estimate_recorded(const Scenario& scenario, const std::vector<lte::ResourceGrid>& antennas,
                             const std::vector<rx::KnownCell>& cells, const lte::CellIdentity& serving,
                             double cfo_hz, bool want_pbch, bool want_crs);
/// SIC discovery on the first discovery_frames frames of a recorded grid.
DiscoveryResult discover_recorded(const Scenario& scenario, const lte::ResourceGrid& antenna0);

struct PositionOutput {
  dsp::DopplerSpectrogram spectrogram;
  dsp::DopplerTrack track;  // outliers removed
};
/// Main path, CSI ratio, band-pass, spectrogram and Doppler track of receiver
/// position 0 or 1. The reference is the position's second antenna, or port 1
/// of the serving cell for PBCH when available.
PositionOutput process_position(const CaptureCsi& csi, Method method, const Scenario& scenario,
                                std::size_t position);
/// Groups CSI series read back from CSV by source, port and antenna.
CaptureCsi capture_csi_from(const std::vector<rx::CsiSeries>& series);

MethodResult classify_capture(const CaptureCsi& csi, Method method, const Scenario& scenario);

TrialOutcome run_gesture_trial(const Scenario& scenario, gesture::GestureLabel label, int index);

struct PipelineResult {
  std::vector<TrialOutcome> trials;
  std::vector<std::pair<Method, gesture::RecognitionReport>> reports;
};
/// Runs `fn(i)` for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency). The first exception thrown is rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Trials run in parallel; results are stored in (label, index) order and
/// do not depend on the thread count. `progress` is called under a lock in
/// completion order.
PipelineResult run_pipeline(const Scenario& scenario,
                            const std::function<void(const TrialOutcome&)>& progress = {}, int threads = 0);

struct NmseResult {
  double pbch_db = 0.0;
  double crs_db = 0.0;
};
/// Serving-cell NMSE of the joint PBCH estimate (per RE group) and the CRS
/// estimate (per subcarrier) against the true channel, genie cell list.
NmseResult run_nmse_trial(const Scenario& scenario, std::uint64_t seed, std::size_t frames);

struct BenchRow {
  std::string axis;
  double value = 0.0;
  std::string method;
  std::string metric;
  double result = 0.0;
};
/// Applies one sweep point to a copy of the scenario.
Scenario with_sweep_value(Scenario scenario, const std::string& axis, double value);
std::vector<BenchRow> run_bench(const Scenario& scenario, int threads = 0);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace icisense::sim
