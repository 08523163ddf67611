#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace pentamap {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }

// Reduce to [0, 2*pi).
inline double wrap_2pi(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod roundoff
  return r;
}

// Reduce to (-pi, pi]. Reflection then negates vertex angles except at pi.
inline double wrap_pi(double a) {
  double r = std::fmod(a, two_pi);
  if (r <= -pi) r += two_pi;
  if (r > pi) r -= two_pi;
  return r;
}

// Circular distance |a - b| on R/2piZ, in [0, pi].
inline double circ_dist(double a, double b) { return std::abs(wrap_pi(a - b)); }

} // namespace pentamap
