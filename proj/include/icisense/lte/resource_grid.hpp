#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "icisense/lte/types.hpp"

namespace icisense::lte {

/// Frequency-domain samples of one transmit or receive stream, indexed by
/// (frame, subframe, symbol, subcarrier) in row-major order.
class ResourceGrid {
 public:
  ResourceGrid() = default;
  ResourceGrid(std::size_t n_frames, std::size_t n_sc);

  std::size_t n_frames() const { return n_frames_; }
  std::size_t n_sc() const { return n_sc_; }
  int n_rb() const { return static_cast<int>(n_sc_ / kSubcarriersPerRb); }
  bool empty() const { return samples_.empty(); }

  cf64& at(std::size_t frame, int subframe, int symbol, std::size_t sc) {
    return samples_[index(frame, subframe * kSymbolsPerSubframe + symbol, sc)];
  }
  const cf64& at(std::size_t frame, int subframe, int symbol, std::size_t sc) const {
    return samples_[index(frame, subframe * kSymbolsPerSubframe + symbol, sc)];
  }

  /// All subcarriers of one frame symbol (0..139).
  std::span<cf64> symbol(std::size_t frame, int frame_symbol) {
    return {samples_.data() + index(frame, frame_symbol, 0), n_sc_};
  }
  std::span<const cf64> symbol(std::size_t frame, int frame_symbol) const {
    return {samples_.data() + index(frame, frame_symbol, 0), n_sc_};
  }

  std::span<cf64> samples() { return samples_; }
  std::span<const cf64> samples() const { return samples_; }

  ResourceGrid slice_frames(std::size_t first, std::size_t count) const;
  void append_frames(const ResourceGrid& other);

  /// First subcarrier of the middle 72 (PBCH) and middle 62 (PSS/SSS) bands.
  std::size_t center_72_start() const { return n_sc_ / 2 - kPbchSubcarriers / 2; }
  std::size_t center_62_start() const { return n_sc_ / 2 - kSyncLength / 2; }

  ResourceGrid& operator+=(const ResourceGrid& other);
  ResourceGrid& operator-=(const ResourceGrid& other);

 private:
  std::size_t index(std::size_t frame, int frame_symbol, std::size_t sc) const {
    return (frame * kSymbolsPerFrame + static_cast<std::size_t>(frame_symbol)) * n_sc_ + sc;
  }
  void check_same_shape(const ResourceGrid& other) const;

  std::size_t n_frames_ = 0;
  std::size_t n_sc_ = 0;
  std::vector<cf64> samples_;
};

/// Baseband frequency of subcarrier k relative to the carrier; the DC
/// subcarrier is not part of the grid.
double subcarrier_frequency_hz(std::size_t k, std::size_t n_sc);

// CSGRID01 on-disk format: magic, four little-endian u32 dimensions
// (n_frames, 10, 14, n_sc), then interleaved little-endian float32 I/Q.
void write_grid(std::ostream& out, const ResourceGrid& grid);
ResourceGrid read_grid(std::istream& in);
void write_grid_file(const std::string& path, const ResourceGrid& grid);
ResourceGrid read_grid_file(const std::string& path);

}  // namespace icisense::lte
