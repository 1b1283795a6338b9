#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "icisense/lte/mib.hpp"
#include "icisense/lte/types.hpp"

namespace icisense::lte {

struct RePosition {
  int symbol;      // frame symbol (subframe 0, so 7..10)
  int subcarrier;  // absolute grid subcarrier
};

/// The 240 PBCH resource elements of one frame in mapping order (subcarrier
/// first, then symbol). CRS positions of all four ports are reserved.
std::vector<RePosition> pbch_positions(int n_id, std::size_t n_sc);

struct PbchFrame {
  std::vector<std::vector<cf64>> ports;  // 240 symbols per port, unit total power
  ReMap map;
};

/// QPSK-modulates the `quarter_index` 480-bit segment of a codeword; two-port
/// cells use space-frequency block coding. Amplitude is not applied.
PbchFrame modulate_pbch(std::span<const std::uint8_t> codeword, int quarter_index,
                        const CellConfig& cell, std::size_t n_sc);

/// Known transmit symbols of one cell over the 4 x 72 PBCH window: PBCH
/// symbols, the cell's own CRS, and zeros on reserved positions.
struct PbchWindow {
  int n_ports = 1;
  // ports[p][l * 72 + k'] for window symbol l = 0..3 and window subcarrier k'.
  std::vector<std::array<cf64, kPbchSymbols * kPbchSubcarriers>> ports;

  const cf64& at(int port, int l, int k) const { return ports[port][l * kPbchSubcarriers + k]; }
};

/// Rebuilds the transmitted PBCH-window symbols of any frame from the MIB
/// decoded once: the SFN is the only field that changes between frames.
PbchWindow reconstruct_pbch_window(const CellIdentity& identity, int n_ports,
                                   const MibPayload& constant_fields, int sfn,
                                   std::size_t n_sc);

/// Transmit symbols x^p restricted to the 240 PBCH REs (mapping order).
std::vector<std::vector<cf64>> reconstruct_pbch_sequence(const CellIdentity& identity,
                                                         int n_ports,
                                                         const MibPayload& constant_fields,
                                                         int sfn, std::size_t n_sc);

}  // namespace icisense::lte
