#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hb/schur.hpp"
#include "hb/types.hpp"

namespace hb {

/// Open arc of T traversed counterclockwise from `start` to `end` (radians).
struct Arc {
    double start = 0.0;
    double end = 0.0;

    /// Arc length in (0, 2pi).
    double length() const;
    /// Whether an angle lies in the closed arc.
    bool closure_contains(double angle) const;
    double midpoint() const;
};

/// Boundary part of the spectrum: isolated points plus closed arcs
/// (the closure of the region where the boundary modulus drops below 1).
struct BoundarySupport {
    std::vector<double> points;
    bool whole_circle = false;

    bool empty() const { return points.empty() && !whole_circle; }
};

struct SpectrumReport {
    std::vector<Complex> interior_zeros;
    BoundarySupport boundary;
};

/// sigma(b): interior zeros plus the boundary set of non-regular points
/// (atom locations, declared accumulation points of a zero family, and the
/// closure of {|b| < 1} for outer densities).
SpectrumReport spectrum(const SchurSpec& spec);

struct ExtremePointReport {
    Verdict3 verdict = Verdict3::Inconclusive;  ///< Finite == "is extreme"
    bool is_extreme = false;
    std::string evidence;
    /// Quadrature of log(1 - |b|) over T when it converges (non-extreme case).
    std::optional<double> log_gap_integral;
    double quadrature_stability = 0.0;  ///< change under mesh doubling
};

/// Extreme point of the unit ball of H-inf: the log-gap integral diverges.
/// Inner specs short-circuit; densities answer through their analytic flag
/// with quadrature evidence attached.
ExtremePointReport is_extreme_point(const SchurSpec& spec);

struct ArcVerdict {
    Arc arc;
    bool passes = false;
    std::vector<double> blocking_points;
    std::string channel_evidence;
    /// Finite Blaschke only: min over the arc grid of the smallest singular
    /// value of (Id - conj(zeta) X*).
    std::optional<double> min_resolvent_sv;
};

/// Continuation verdict for an open arc: passes iff the closed arc avoids
/// the boundary spectrum; finite Blaschke specs additionally check the
/// resolvent-set condition on a 128-point grid.
ArcVerdict arc_classification(const SchurSpec& spec, Arc arc);

struct TraceCauchyResult {
    bool cauchy = false;
    double final_diff = 0.0;
    double tail_estimate = 0.0;
    std::vector<double> diffs;
};

/// Radial Cauchy test of the kernel boundary trace: evaluates
/// kernel(lambda, r e^{i theta}) for r = 1 - 10^{-k}, k = 1..k_max, and
/// checks that successive differences decay geometrically below `tol`.
TraceCauchyResult kernel_trace_cauchy(const SchurSpec& spec, Complex lambda,
                                      double theta, int k_max = 8,
                                      double tol = 1e-6);

}  // namespace hb
