#pragma once

#include <cmath>
#include <numbers>

namespace npw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps any finite angle onto [0, 2π). Values already in range are returned unchanged.
inline double reduce_phase(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// j-th node of an N-point uniform periodic grid starting at `origin`.
inline double grid_phase(double origin, int j, int samples) {
  return reduce_phase(origin + kTwoPi * static_cast<double>(j) / static_cast<double>(samples));
}

// Origin that places `phi` exactly on an N-point uniform grid while keeping all nodes sorted in [0, 2π).
inline double aligned_origin(double phi, int samples) {
  const double step = kTwoPi / static_cast<double>(samples);
  return std::fmod(reduce_phase(phi), step);
}

}  // namespace npw
