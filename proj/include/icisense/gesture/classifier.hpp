#pragma once

#include <array>
#include <string>
#include <vector>

#include "icisense/dsp/dsp.hpp"
#include "icisense/gesture/label.hpp"

namespace icisense::gesture {

struct ClassifierConfig {
  double kappa = 0.9;             // sign-agreement fraction for push/pull
  int pause_min_windows = 4;
  // |f1| + |f2| above this fraction of its capture maximum is activity
  double activity_fraction = 0.25;
  int min_active_windows = 2;
  int hampel_half_width = 2;      // 5-sample window
  double hampel_sigmas = 3.0;
};

/// Hampel filter: samples further than n_sigmas scaled MADs from the
/// sliding median are replaced by that median.
dsp::DopplerTrack remove_outliers(const dsp::DopplerTrack& track, const ClassifierConfig& config = {});

bool detect_pause(const dsp::DopplerTrack& f1, const dsp::DopplerTrack& f2,
                  const ClassifierConfig& config = {});

/// Decision tree over the two receivers' tracks (outliers already removed).
GestureLabel classify(const dsp::DopplerTrack& f1, const dsp::DopplerTrack& f2,
                      const ClassifierConfig& config = {});

struct RecognitionReport {
  std::array<std::array<int, kLabelCount>, 6> confusion{};  // truth gesture x prediction
  int total = 0;
  int correct = 0;
  int error_recognition = 0;  // a different gesture
  int false_alarm = 0;        // a gesture predicted when none was made
  int missed_detection = 0;   // none predicted for a gesture

  double accuracy() const { return total > 0 ? static_cast<double>(correct) / total : 0.0; }
  int trials(GestureLabel truth) const;
};

RecognitionReport evaluate(const std::vector<GestureLabel>& predictions,
                           const std::vector<GestureLabel>& truths);

/// Aligned text table of the confusion matrix and error counts.
std::string render_table(const RecognitionReport& report, const std::string& title = {});

}  // namespace icisense::gesture
