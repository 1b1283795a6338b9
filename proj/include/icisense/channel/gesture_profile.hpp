#pragma once

#include <array>

#include "icisense/gesture/label.hpp"

namespace icisense::channel {

inline constexpr double kMaxGestureDopplerHz = 20.0;
inline constexpr double kMinGestureDopplerHz = 3.0;

/// Scripted hand motion seen by the two receiver positions.
struct GestureScript {
  gesture::GestureLabel label = gesture::GestureLabel::Push;
  double start_s = 0.5;
  double duration_s = 1.0;  // includes the pause of v1/v2
  double peak_doppler_hz = 10.0;
  double pause_s = 0.3;
  double ramp_s = 0.1;

  void validate() const;
};

/// Instantaneous Doppler (Hz) at receiver positions 1 and 2.
std::array<double, 2> gesture_doppler_profile(const GestureScript& script, double t);

/// Integral of the Doppler profile from 0 to t (cycles), per position.
std::array<double, 2> gesture_doppler_cycles(const GestureScript& script, double t);

}  // namespace icisense::channel
