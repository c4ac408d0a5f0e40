// SPDX-License-Identifier: Apache-2.0

#ifndef JTCAL_PHASE_HPP
#define JTCAL_PHASE_HPP

#include <cmath>
#include <numbers>

namespace jtcal {

inline constexpr double kPi = std::numbers::pi;

/// Wraps an angle into (-pi, pi]. -pi maps to +pi.
inline double wrap_phase(double x) {
  double r = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace jtcal

#endif  // JTCAL_PHASE_HPP
