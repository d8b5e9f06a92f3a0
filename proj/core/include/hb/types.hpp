#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hb {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Machine epsilon shorthand used by error estimates.
inline constexpr double kEps = 2.220446049250313e-16;

/// Angle snapping tolerance: two boundary angles closer than this are the
/// same point for classification purposes.
inline constexpr double kAngleSnap = 1e-12;

inline Complex unit_point(double theta) { return std::polar(1.0, theta); }

/// Wrap an angle into [0, 2pi).
inline double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod can return exactly 2pi after the correction when t was a tiny
    // negative number.
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

/// Shortest angular distance between two angles, in [0, pi].
inline double angle_distance(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

inline bool same_angle(double a, double b, double tol = kAngleSnap) {
    return angle_distance(a, b) <= tol;
}

}  // namespace hb
