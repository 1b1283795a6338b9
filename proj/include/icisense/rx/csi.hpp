#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "icisense/lte/types.hpp"

namespace icisense::rx {

enum class CsiSource { Pbch, Crs };

/// One column of a CSI series: an RE group (PBCH) or a CRS subcarrier.
struct CsiColumn {
  int group_k = 0;  // group index, or grid subcarrier for CRS
  int group_l = 0;
  double freq_hz = 0.0;  // centre frequency of the column
};

/// Per-frame channel estimates of one stream at one receive antenna,
/// sampled once per 10 ms frame.
struct CsiSeries {
  CsiSource source = CsiSource::Pbch;
  int pci = 0;
  int port = 0;
  int antenna = 0;
  std::size_t first_frame = 0;
  std::vector<CsiColumn> columns;
  std::vector<cf64> values;  // frame-major: values[n * columns.size() + c]
  std::vector<std::uint8_t> valid;  // per value; 0 where interpolated

  static constexpr double kSampleRateHz = 1.0 / lte::kFramePeriodS;

  std::size_t n_frames() const { return columns.empty() ? 0 : values.size() / columns.size(); }
  std::size_t n_columns() const { return columns.size(); }
  cf64& at(std::size_t n, std::size_t c) { return values[n * columns.size() + c]; }
  const cf64& at(std::size_t n, std::size_t c) const { return values[n * columns.size() + c]; }
  /// Time series of one column.
  std::vector<cf64> column(std::size_t c) const;
};

/// CSV with header frame_index,group_k,group_l,stream,re,im,freq_hz; the
/// stream tag is source:pci:port:antenna.
void write_csi_csv(std::ostream& out, const std::vector<CsiSeries>& series);
std::vector<CsiSeries> read_csi_csv(std::istream& in);

}  // namespace icisense::rx
