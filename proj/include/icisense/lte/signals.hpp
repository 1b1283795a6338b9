#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icisense/lte/types.hpp"

namespace icisense::lte {

/// Length-31 Gold sequence c(n): first m-sequence seeded with a single one,
/// second seeded with c_init, both advanced 1600 steps before output.
std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, std::size_t length);

/// k0 = (v + N_ID mod 6) mod 6
int crs_subcarrier_offset(int v, int n_id);

/// Whether a given port carries CRS in a symbol of a slot (l = 0..6).
bool crs_in_slot_symbol(int port, int l);

/// The v term of the subcarrier offset for a port/slot/symbol.
int crs_v(int port, int slot, int l);

/// Unit-power CRS reference sequence r_{l,ns}(m), m = 0..2*110-1.
std::vector<cf64> crs_reference_sequence(int n_id, int slot, int l);

struct CrsPortSymbols {
  int port = 0;
  std::vector<int> subcarriers;
  std::vector<cf64> values;  // scaled by the cell amplitude
};

struct CrsAllocation {
  std::vector<CrsPortSymbols> ports;
  ReMap map;
};

/// CRS for every port of `cell` present in (subframe, symbol), mapped on an
/// n_sc-wide grid. Throws if no port carries CRS in that symbol.
CrsAllocation generate_crs(const CellConfig& cell, std::size_t frame, int subframe,
                           int symbol, std::size_t n_sc);

/// Frequency-domain PSS d_u(n) with the DC element punctured (62 values).
std::vector<cf64> generate_pss(int n_id2);

/// Interleaved m-sequence SSS (62 values of +-1) for subframe 0 or 5.
std::vector<double> generate_sss(int n_id1, int n_id2, int subframe);

// TDD placement of synchronization signals.
inline constexpr int kPssSymbol = 2;   // third symbol of subframes 1 and 6
inline constexpr int kSssSymbol = 13;  // last symbol of subframes 0 and 5
inline constexpr int kPssSubframes[2] = {1, 6};
inline constexpr int kSssSubframes[2] = {0, 5};

}  // namespace icisense::lte
