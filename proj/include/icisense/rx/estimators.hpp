#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "icisense/lte/resource_grid.hpp"
#include "icisense/lte/types.hpp"
#include "icisense/rx/csi.hpp"

namespace icisense::rx {

/// A cell whose PBCH can be rebuilt in every frame.
struct KnownCell {
  lte::CellIdentity identity;
  int n_ports = 1;
  lte::MibPayload constant_fields;  // SFN bits are ignored
  int sfn_at_frame0 = 0;            // SFN of capture frame 0

  int sfn(std::size_t frame) const {
    return static_cast<int>((static_cast<std::size_t>(sfn_at_frame0) + frame) % lte::kSfnModulus);
  }
};

struct ReGroup {
  int k_g = 0;
  int l_g = 0;
  int K = 3;
  int L = 4;
  /// Window subcarrier / symbol index ranges covered by the group.
  int first_k() const { return k_g * K; }
  int first_l() const { return l_g * L; }
};

struct JointLsConfig {
  int K = 3;
  int L = 4;
  double max_condition = 1e6;
};

/// Per-frame joint LS output: h[group][stream] for streams ordered by cell,
/// then port.
struct JointLsFrame {
  std::vector<std::vector<cf64>> h;
  std::vector<std::uint8_t> group_valid;
};

/// Joint least-squares channel estimation over the shared 4 x 72 PBCH window
/// of every known cell. Each RE group stacks its received samples into y and
/// the rebuilt transmit symbols of all streams into X; h = (X^H X)^-1 X^H y.
class JointLsEstimator {
 public:
  JointLsEstimator(std::vector<KnownCell> cells, std::size_t n_sc, JointLsConfig config = {});

  int n_streams() const { return n_streams_; }
  const std::vector<ReGroup>& groups() const { return groups_; }
  const std::vector<KnownCell>& cells() const { return cells_; }
  const JointLsConfig& config() const { return config_; }
  int stream_index(int cell, int port) const { return first_stream_[cell] + port; }
  /// Centre frequency of a group in Hz.
  double group_frequency_hz(const ReGroup& g) const;

  /// Estimates every stream for `frame` of each grid (one per antenna).
  std::vector<JointLsFrame> estimate(std::span<const lte::ResourceGrid* const> grids,
                                     std::size_t frame) const;
  JointLsFrame estimate(const lte::ResourceGrid& grid, std::size_t frame) const;

  /// Rebuilt window symbols of one stream in a frame, [l * 72 + k'].
  std::vector<cf64> window_symbols(int stream, std::size_t frame) const;

 private:
  std::vector<KnownCell> cells_;
  std::size_t n_sc_;
  JointLsConfig config_;
  int n_streams_ = 0;
  std::vector<int> first_stream_;
  std::vector<ReGroup> groups_;
};

/// Convenience wrapper: per-stream CSI series for frames [0, n_frames).
std::vector<CsiSeries> joint_ls_estimate(const lte::ResourceGrid& grid,
                                         const std::vector<KnownCell>& cells, int antenna,
                                         JointLsConfig config = {});

/// Fills invalid entries of one group row by linear interpolation over k.
void interpolate_invalid_groups(JointLsFrame& frame, int groups_k, int groups_l);

struct CrsOptions {
  // Frame symbols whose port-0 CRS are used; one estimate per CRS subcarrier
  // and frame, averaged over the listed symbols (they share subcarriers).
  std::vector<int> symbols = {0};
};

/// Per-subcarrier LS estimate h = y / x on the serving cell's port-0 CRS.
CsiSeries crs_ls_estimate(const lte::ResourceGrid& grid, const lte::CellIdentity& identity,
                          int antenna = 0, const CrsOptions& options = {});

/// CRS received power in dB relative to `reference_db`, using the product of
/// estimates on two CRS symbols that share subcarriers, so that interference
/// and noise, independent across symbols, average out. Returns -inf when
/// the estimate is not positive.
double measure_rsrp(const lte::ResourceGrid& grid, const lte::CellIdentity& identity,
                    const lte::FrameStructure& structure = {}, double reference_db = 0.0);

}  // namespace icisense::rx
