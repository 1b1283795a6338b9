#pragma once

#include <optional>
#include <vector>

#include "icisense/lte/resource_grid.hpp"
#include "icisense/lte/types.hpp"
#include "icisense/rx/estimators.hpp"

namespace icisense::rx {

/// Rotates every symbol by exp(-j 2 pi cfo t) to undo a carrier offset.
void compensate_cfo(lte::ResourceGrid& grid, double cfo_hz, std::size_t first_frame = 0);

struct DetectOptions {
  lte::FrameStructure structure;
  double pss_threshold = 0.3;  // normalized segmented PSS metric, noise floor ~1/8
  int pss_segment = 8;
  int sss_candidates_per_root = 2;
  std::vector<lte::CellIdentity> exclude;
};

struct CellDetection {
  lte::CellIdentity identity;
  double cfo_hz = 0.0;
  int timing_subframe = 0;  // 0: SSS of subframe 0 found in subframe 0; 5: half-frame shift
  double pss_metric = 0.0;
  double sss_metric = 0.0;
};

/// Ranked cell hypotheses (strongest first) whose PSS metric clears the
/// threshold. Identities in `exclude` are skipped.
std::vector<CellDetection> detect_candidates(const lte::ResourceGrid& grid,
                                             const DetectOptions& options = {});

/// Strongest remaining cell, or nullopt if nothing clears the threshold.
std::optional<CellDetection> detect_cell(const lte::ResourceGrid& grid,
                                         const DetectOptions& options = {});

struct MibOptions {
  int repetitions = 1;      // frames soft-combined within one 40 ms TTI
  int max_attempts = 8;     // frames tried before giving up
  std::vector<int> port_hypotheses = {1, 2};
};

struct DecodedMib {
  lte::MibPayload mib;
  int n_ports = 1;
  int sfn_at_frame0 = 0;
  std::size_t frame = 0;  // capture frame that was decoded
};

/// PBCH decoding with a coarse single-cell CRS channel from the first PBCH
/// symbol. Tries port hypotheses, quarter offsets and successive frames.
std::optional<DecodedMib> decode_mib(const lte::ResourceGrid& grid, const lte::CellIdentity& identity,
                                     const MibOptions& options = {});

struct CellInfo {
  lte::CellIdentity identity;
  int n_ports = 1;
  lte::MibPayload mib;
  int sfn_at_frame0 = 0;
  double rsrp_db = 0.0;
  int sic_order = 0;

  KnownCell known() const { return {identity, n_ports, mib, sfn_at_frame0}; }
};

enum class Smoothing { Nearest, Linear };

struct SicOptions {
  DetectOptions detect;
  MibOptions mib;
  JointLsConfig joint{3, 4, 1e6};
  Smoothing smoothing = Smoothing::Linear;
  int max_cells = 8;
  int max_candidates = 4;  // hypotheses tried per iteration before stopping
  double rsrp_reference_db = 0.0;
};

struct SicResult {
  std::vector<CellInfo> cells;  // sorted by RSRP, strongest first
  double cfo_hz = 0.0;
  lte::ResourceGrid residual;
};

/// Successive interference cancellation: detect, decode, rebuild and
/// subtract PSS/SSS/PBCH of each discovered cell, until no new cell decodes.
SicResult sic_cell_search(const lte::ResourceGrid& grid, const SicOptions& options = {});

/// Subtracts the PBCH window and synchronization signals of `cells` from
/// `grid`, with channels from a joint LS fit of the same cells.
void cancel_known_cells(lte::ResourceGrid& grid, const std::vector<KnownCell>& cells,
                        const JointLsConfig& config, Smoothing smoothing,
                        const lte::FrameStructure& structure = {});

}  // namespace icisense::rx
