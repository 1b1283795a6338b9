#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icisense/channel/gesture_profile.hpp"
#include "icisense/lte/cell.hpp"
#include "icisense/lte/resource_grid.hpp"

namespace icisense::channel {

inline constexpr double kMaxPathDelayS = 4.7e-6;  // normal CP budget

struct PathSpec {
  double delay_s = 0.0;
  cf64 gain{1.0, 0.0};

  void validate() const;
};

/// Statistics of the randomly drawn static multipath of every link.
struct StaticProfile {
  int n_paths = 6;
  double first_delay_s = 50e-9;
  double max_delay_s = 1e-6;
  double rms_delay_s = 0.3e-6;
  double k_factor_db = 3.0;  // first-path power over the scattered paths
};

struct ChannelSpec {
  StaticProfile static_paths;
  double hand_gain_db = -20.0;         // relative to the static channel power
  double hand_excess_delay_s = 20e-9;  // relative to the first path
  double phase_noise_rad_per_frame = 0.05;
  double cfo_hz = 0.0;
  double snr_db = 30.0;  // per RE, relative to a 0 dB cell through a unit channel
  int positions = 2;
  int antennas_per_position = 2;

  double noise_variance() const;
  void validate() const;
};

/// Frozen draw of every random channel quantity of one capture: static
/// paths and hand path per (stream, antenna), and the phase-noise walk of
/// each receiver position. A stream is one (cell, port) pair.
class ChannelRealization {
 public:
  ChannelRealization(const ChannelSpec& spec, std::vector<int> ports_per_cell, std::size_t n_sc,
                     std::size_t n_frames, std::optional<GestureScript> gesture,
                     std::uint64_t seed);

  /// Explicit paths, no gesture; every link gets the same paths.
  ChannelRealization(const ChannelSpec& spec, std::vector<int> ports_per_cell, std::size_t n_sc,
                     std::size_t n_frames, std::vector<PathSpec> static_paths,
                     std::optional<PathSpec> hand_path, std::optional<GestureScript> gesture,
                     std::uint64_t seed);

  const ChannelSpec& spec() const { return spec_; }
  std::size_t n_sc() const { return n_sc_; }
  std::size_t n_frames() const { return n_frames_; }
  int n_cells() const { return static_cast<int>(first_stream_.size()); }
  int n_streams() const { return static_cast<int>(stream_cell_.size()); }
  int n_ports(int cell) const;
  int n_antennas() const { return spec_.positions * spec_.antennas_per_position; }
  int position_of(int antenna) const { return antenna / spec_.antennas_per_position; }
  int stream_index(int cell, int port) const { return first_stream_[cell] + port; }
  int stream_cell(int stream) const { return stream_cell_[stream]; }
  const std::optional<GestureScript>& gesture() const { return gesture_; }

  const std::vector<PathSpec>& static_paths(int stream, int antenna) const {
    return links_[link(stream, antenna)].paths;
  }

  /// h(k, n) at one symbol: phase-noise rotated static plus dynamic part.
  cf64 evaluate(int stream, int antenna, std::size_t k, std::size_t frame, int frame_symbol) const;
  void evaluate_row(int stream, int antenna, std::size_t frame, int frame_symbol,
                    std::span<cf64> out) const;
  /// Subcarriers [first_sc, first_sc + out.size()) only.
  void evaluate_row(int stream, int antenna, std::size_t frame, int frame_symbol, std::size_t first_sc,
                    std::span<cf64> out) const;
  /// Static response h_s(k) and the hand path h_d(k, n) without phase noise.
  cf64 static_response(int stream, int antenna, std::size_t k) const;
  cf64 dynamic_response(int stream, int antenna, std::size_t k, std::size_t frame,
                        int frame_symbol) const;
  double phase_noise(int position, std::size_t frame, int frame_symbol) const;

 private:
  struct Link {
    std::vector<PathSpec> paths;
    std::vector<cf64> hs;  // per subcarrier
    std::vector<cf64> hd;  // hand path at t = 0, per subcarrier
  };
  std::size_t link(int stream, int antenna) const {
    return static_cast<std::size_t>(stream) * static_cast<std::size_t>(n_antennas()) +
           static_cast<std::size_t>(antenna);
  }
  void init_streams(const std::vector<int>& ports_per_cell);
  void init_phase(std::uint64_t seed);
  void fill_link(Link& l, const std::optional<PathSpec>& hand);
  cf64 dynamic_rotation(int position, std::size_t frame, int frame_symbol) const;

  ChannelSpec spec_;
  std::size_t n_sc_;
  std::size_t n_frames_;
  std::optional<GestureScript> gesture_;
  std::vector<int> first_stream_;
  std::vector<int> stream_cell_;
  std::vector<Link> links_;
  std::vector<std::vector<double>> phase_noise_;    // per position, per symbol
  std::vector<std::vector<double>> doppler_cycles_;  // per position, per symbol
  std::vector<double> freq_hz_;
};

/// Sum of every cell's transmit grids through the channel of one receive
/// antenna, plus AWGN and the receiver CFO. `cells[c].ports` are grids of
/// equal size whose frame 0 is capture frame `first_frame`. Only symbols set
/// in `mask` are produced. Noise of each (frame, symbol) is drawn from a
/// seed derived from `noise_seed`, so different masks agree symbol by symbol.
lte::ResourceGrid synthesize_received(std::span<const lte::CellFrame> cells,
                                      const ChannelRealization& real, int antenna,
                                      std::size_t first_frame, const lte::SymbolMask& mask,
                                      std::uint64_t noise_seed);
/// Subcarrier window applied to a subset of the masked symbols.
struct SynthBand {
  lte::SymbolMask symbols;
  std::size_t first_sc = 0;
  std::size_t count = 0;
};

/// Same, writing into `out` (reallocated only on a shape mismatch); symbols
/// outside the mask are left untouched. Symbols in `band->symbols` are only
/// produced on the band's subcarriers and are zero elsewhere. Noise is drawn
/// per RE, so a band agrees with the full synthesis on its subcarriers.
void synthesize_into(std::span<const lte::CellFrame> cells, const ChannelRealization& real, int antenna,
                     std::size_t first_frame, const lte::SymbolMask& mask, std::uint64_t noise_seed,
                     lte::ResourceGrid& out, const SynthBand* band = nullptr);

}  // namespace icisense::channel
