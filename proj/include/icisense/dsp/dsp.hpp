#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "icisense/rx/csi.hpp"

namespace icisense::dsp {

using cf64 = std::complex<double>;

inline constexpr double kSampleRateHz = 100.0;
inline constexpr int kMaxDopplerHz = 50;  // Nyquist at one sample per frame

/// One complex sample per frame of a single path.
struct PathSeries {
  rx::CsiSource source = rx::CsiSource::Pbch;
  std::string tag;
  std::vector<cf64> values;
  double sample_rate_hz = kSampleRateHz;
};

struct MainPathOptions {
  double min_delay_s = -1e-6;
  double max_delay_s = 4.7e-6;
  int oversample = 4;  // delay bins per 1/bandwidth
};

/// Inverse DFT across the columns of every frame on a delay grid; returns
/// the bin with the largest capture-average magnitude.
PathSeries extract_main_path(const rx::CsiSeries& csi, const MainPathOptions& options = {});
/// Same over a subset of columns (empty = all).
PathSeries extract_main_path(const rx::CsiSeries& csi, const std::vector<std::size_t>& columns,
                             const MainPathOptions& options = {});

/// Element-wise series / reference. Samples whose reference magnitude falls
/// below floor_rel * median|reference| are bridged by linear interpolation.
PathSeries csi_ratio(const PathSeries& series, const PathSeries& reference, double floor_rel = 1e-6);

/// Kaiser-windowed linear-phase FIR band-pass, 3-20 Hz passband.
struct BandpassDesign {
  double pass_low_hz = 3.0;
  double pass_high_hz = 20.0;
  double stop_low_hz = 1.0;
  double stop_high_hz = 25.0;
  double attenuation_db = 50.0;
};

std::vector<double> design_bandpass(const BandpassDesign& design = {}, double fs = kSampleRateHz);
/// |H(f)| of a symmetric FIR at sample rate fs.
double fir_magnitude(const std::vector<double>& taps, double f_hz, double fs = kSampleRateHz);

/// Zero-phase band-pass (centred FIR, odd-reflection padded edges). Throws
/// if the series is shorter than the filter.
PathSeries bandpass_dynamic(const PathSeries& series, const BandpassDesign& design = {});

struct DopplerSpectrogram {
  double window_s = 0.1;
  double step_s = 0.05;
  double sample_rate_hz = kSampleRateHz;
  std::vector<int> freqs_hz;              // -50..50
  std::vector<std::vector<double>> mag;   // [window][bin]

  std::size_t n_windows() const { return mag.size(); }
  double window_start_s(std::size_t w) const { return static_cast<double>(w) * step_s; }
};

/// Sliding-window DFT on the integer-Hz grid [-50, 50].
DopplerSpectrogram doppler_spectrogram(const PathSeries& series, double window_s = 0.1,
                                       double step_s = 0.05);

struct DopplerTrack {
  double step_s = 0.05;
  std::vector<double> f_hz;
};

/// Default power threshold: 6 dB above the median per-window peak, which
/// tracks the off-gesture floor while gestures cover less than half the
/// capture; never below 1e-3 of the strongest window.
double default_track_threshold(const DopplerSpectrogram& spec);
DopplerTrack peak_doppler_track(const DopplerSpectrogram& spec, double power_threshold);
DopplerTrack peak_doppler_track(const DopplerSpectrogram& spec);

/// Magnitude DTW distance with a Sakoe-Chiba band.
double dtw_distance(const std::vector<double>& a, const std::vector<double>& b, int band);

struct SubcarrierSelectOptions {
  int band = 10;
  int reference_count = 24;  // evenly spaced reference subcarriers
};

/// Ranks subcarriers by mean DTW distance of their relative magnitude series
/// (|h| / mean|h| - 1) to a reference subset and keeps the `count` most
/// mutually consistent ones, in ascending index order. All-zero series are
/// dropped.
std::vector<std::size_t> crs_subcarrier_select(const std::vector<std::vector<cf64>>& raw, int count,
                                               const SubcarrierSelectOptions& options = {});
/// Per-column series of a CRS estimate, as expected by crs_subcarrier_select.
std::vector<std::vector<cf64>> column_series(const rx::CsiSeries& csi);

/// CSV: window_start_s then one column per Doppler bin.
void write_spectrogram_csv(std::ostream& out, const DopplerSpectrogram& spec);
/// CSV: time_s,f_hz
void write_track_csv(std::ostream& out, const DopplerTrack& track);
DopplerTrack read_track_csv(std::istream& in);

}  // namespace icisense::dsp
