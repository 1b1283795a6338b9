#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace icisense::gesture {

enum class GestureLabel { Push, Pull, SlideLeft, SlideRight, V1, V2, None };

inline constexpr std::array<GestureLabel, 6> kGestures = {
    GestureLabel::Push,      GestureLabel::Pull, GestureLabel::SlideLeft,
    GestureLabel::SlideRight, GestureLabel::V1,  GestureLabel::V2};

inline constexpr int kLabelCount = 7;  // six gestures plus none

constexpr std::string_view to_string(GestureLabel g) {
  switch (g) {
    case GestureLabel::Push: return "push";
    case GestureLabel::Pull: return "pull";
    case GestureLabel::SlideLeft: return "slide_left";
    case GestureLabel::SlideRight: return "slide_right";
    case GestureLabel::V1: return "v1";
    case GestureLabel::V2: return "v2";
    case GestureLabel::None: return "none";
  }
  return "none";
}

inline std::optional<GestureLabel> parse_label(std::string_view s) {
  for (int i = 0; i < kLabelCount; ++i) {
    const auto g = static_cast<GestureLabel>(i);
    if (to_string(g) == s) return g;
  }
  return std::nullopt;
}

/// Label with both Doppler signs flipped.
constexpr GestureLabel mirrored(GestureLabel g) {
  switch (g) {
    case GestureLabel::Push: return GestureLabel::Pull;
    case GestureLabel::Pull: return GestureLabel::Push;
    case GestureLabel::SlideLeft: return GestureLabel::SlideRight;
    case GestureLabel::SlideRight: return GestureLabel::SlideLeft;
    case GestureLabel::V1: return GestureLabel::V2;
    case GestureLabel::V2: return GestureLabel::V1;
    case GestureLabel::None: return GestureLabel::None;
  }
  return GestureLabel::None;
}

}  // namespace icisense::gesture
