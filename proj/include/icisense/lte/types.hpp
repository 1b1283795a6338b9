#pragma once

#include <array>
#include <bitset>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace icisense {

using cf64 = std::complex<double>;

namespace lte {

inline constexpr int kSubframesPerFrame = 10;
inline constexpr int kSymbolsPerSubframe = 14;  // normal CP only
inline constexpr int kSymbolsPerSlot = 7;
inline constexpr int kSymbolsPerFrame = kSubframesPerFrame * kSymbolsPerSubframe;
inline constexpr int kSubcarriersPerRb = 12;
inline constexpr int kMaxRb = 110;
inline constexpr double kSubcarrierSpacingHz = 15e3;
inline constexpr double kFramePeriodS = 0.01;
inline constexpr double kSymbolPeriodS = 1e-3 / kSymbolsPerSubframe;
inline constexpr int kSfnModulus = 1024;

// PBCH occupies symbols 7..10 of subframe 0 over the middle 72 subcarriers.
inline constexpr int kPbchFirstSymbol = 7;
inline constexpr int kPbchSymbols = 4;
inline constexpr int kPbchSubcarriers = 72;
inline constexpr int kPbchRePerFrame = 240;
inline constexpr int kPbchBitsPerFrame = 2 * kPbchRePerFrame;
inline constexpr int kPbchCodewordBits = 4 * kPbchBitsPerFrame;  // 40 ms TTI

inline constexpr int kSyncLength = 62;
inline constexpr int kNumPci = 504;

/// Start time of a symbol relative to frame 0, symbol 0.
inline double symbol_time_s(std::size_t frame, int frame_symbol) {
  return static_cast<double>(frame) * kFramePeriodS + frame_symbol * kSymbolPeriodS;
}

/// Physical cell identity, N_ID = 3 * N_ID1 + N_ID2.
class CellIdentity {
 public:
  CellIdentity() = default;
  static CellIdentity from_pci(int pci);
  static CellIdentity from_parts(int n_id1, int n_id2);

  int pci() const { return pci_; }
  int n_id1() const { return pci_ / 3; }
  int n_id2() const { return pci_ % 3; }
  int v_shift() const { return pci_ % 6; }

  friend bool operator==(const CellIdentity&, const CellIdentity&) = default;
  friend auto operator<=>(const CellIdentity&, const CellIdentity&) = default;

 private:
  explicit CellIdentity(int pci) : pci_(pci) {}
  int pci_ = 0;
};

struct CellConfig {
  CellIdentity identity;
  int n_ports = 1;
  double tx_power_db = 0.0;
  double payload_duty = 0.0;
  // Constant MIB content (bandwidth and PHICH configuration).
  int phich_config = 0;

  double amplitude() const;
  void validate() const;
};

/// Rejects scenarios where two cells would place CRS on the same resource
/// element (mod-6 PCI planning rule, extended to port-1 offsets).
void validate_cell_plan(const std::vector<CellConfig>& cells);

enum class SubframeType : std::uint8_t { Downlink, Special, Uplink };

/// TDD frame layout shared by all frame-aligned cells.
struct FrameStructure {
  int tdd_config = 2;     // uplink-downlink configuration 0..6
  int dwpts_symbols = 10; // downlink symbols of the special subframe

  SubframeType subframe_type(int subframe) const;
  bool is_downlink_symbol(int subframe, int symbol) const;
  void validate() const;
};

enum class ReRole : std::uint8_t { Empty, Crs, Pss, Sss, Pbch, Payload };

const char* to_string(ReRole role);

struct ReEntry {
  std::uint16_t symbol;      // frame symbol 0..139
  std::uint16_t subcarrier;
  ReRole role;
};

using ReMap = std::vector<ReEntry>;

/// One bit per frame symbol (subframe * 14 + symbol).
using SymbolMask = std::bitset<kSymbolsPerFrame>;

SymbolMask all_symbols();
SymbolMask subframe_symbols(std::initializer_list<int> subframes);

/// MIB information fields (24 bits in total).
struct MibPayload {
  std::uint8_t bandwidth_index = 0;  // 3 bits
  std::uint8_t phich_config = 0;     // 3 bits
  std::uint8_t sfn_msb8 = 0;         // SFN >> 2
  std::uint16_t spare = 0;           // 10 bits, always zero

  int sfn(int quarter_index) const { return (sfn_msb8 << 2) + quarter_index; }
  static MibPayload for_sfn(int bandwidth_index, int phich_config, int sfn);

  friend bool operator==(const MibPayload&, const MibPayload&) = default;
};

int bandwidth_index_for_rb(int n_rb);
int rb_for_bandwidth_index(int index);

}  // namespace lte
}  // namespace icisense
