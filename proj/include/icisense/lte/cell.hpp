#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "icisense/lte/mib.hpp"
#include "icisense/lte/pbch.hpp"
#include "icisense/lte/resource_grid.hpp"
#include "icisense/lte/types.hpp"

namespace icisense::lte {

struct MapOptions {
  FrameStructure structure;
  SymbolMask symbols = all_symbols();  // symbols left out stay zero
};

/// Per-port transmit grids of one cell for one frame.
struct CellFrame {
  std::vector<ResourceGrid> ports;
};

/// Transmitter of a single cell. Caches every SFN-independent sequence so
/// that mapping consecutive frames only draws payload randomness.
class CellTransmitter {
 public:
  CellTransmitter(CellConfig cell, std::size_t n_sc, MapOptions options = {});

  const CellConfig& config() const { return cell_; }
  std::size_t n_sc() const { return n_sc_; }
  MibPayload mib_for_sfn(int sfn) const;

  /// Places PSS/SSS/CRS/PBCH and draws payload for frame `frame_index`
  /// (SFN = frame_index mod 1024). Each resource block of payload is
  /// occupied for the whole frame with probability payload_duty.
  CellFrame map_frame(std::size_t frame_index, std::mt19937_64& rng) const;
  /// Same, reusing `out`; only symbols in the mask are rewritten.
  void map_frame_into(std::size_t frame_index, std::mt19937_64& rng, CellFrame& out) const;

  /// Role of every resource element of port 0 in one frame.
  ReMap frame_re_map() const;

 private:
  struct CrsEntry {
    int port;
    int subcarrier;
    cf64 value;  // unit amplitude
  };
  const Bits& codeword_for_sfn(int sfn) const { return codewords_[(sfn % kSfnModulus) >> 2]; }

  CellConfig cell_;
  std::size_t n_sc_;
  MapOptions options_;
  std::array<std::vector<CrsEntry>, kSymbolsPerFrame> crs_;
  std::array<std::vector<std::uint8_t>, kSymbolsPerFrame> reserved_;  // per-subcarrier role
  std::vector<cf64> pss_;
  std::array<std::vector<double>, 2> sss_;
  std::vector<RePosition> pbch_positions_;
  std::vector<Bits> codewords_;  // one per TTI, indexed by sfn >> 2
};

}  // namespace icisense::lte
