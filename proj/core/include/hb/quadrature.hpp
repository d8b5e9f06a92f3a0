#pragma once

#include <functional>
#include <vector>

#include "hb/types.hpp"

namespace hb::quad {

/// Result of a node-doubling circle quadrature.
struct CircleMean {
    Complex value{};
    int nodes = 0;
    double error_estimate = 0.0;
};

/// Mean of f(e^{it}) over a uniform grid of `nodes` angles.
/// Spectrally accurate for integrands analytic in an annulus around T.
Complex circle_mean(const std::function<Complex(double)>& f, int nodes);

/// Node-doubling trapezoid on the circle: doubles from `start` until two
/// successive levels agree to `rtol` (relative, with an absolute floor) or
/// `cap` is reached, in which case QuadratureFailure is thrown.
CircleMean refined_circle_mean(const std::function<Complex(double)>& f,
                               double rtol, int start = 256, int cap = 4096,
                               double abs_floor = 0.0);

/// Derivatives f(c), f'(c), ..., f^{(n)}(c) of an analytic function by
/// trapezoidal discretization of the Cauchy integral on |xi - c| = rho.
struct CauchyDerivatives {
    std::vector<Complex> values;
    std::vector<double> error_estimates;  ///< includes the roundoff floor
    int nodes = 0;
};

/// Node count doubles from `start` until successive levels agree to `rtol`
/// relative or to the roundoff floor eps * j! * rho^{-j} * mean|f|, whichever
/// is larger. Throws QuadratureFailure if `cap` is reached without agreement.
CauchyDerivatives cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                     Complex center, double rho, int max_order,
                                     double rtol = 1e-10, int start = 64,
                                     int cap = 4096);

/// Adaptive Gauss-Legendre integration of a real integrand on [a, b].
///
/// `breakpoints` (sorted, inside (a,b)) force panel boundaries; panels are
/// bisected until the two-half estimate agrees with the whole-panel estimate
/// to `rtol`. Gauss nodes are interior to each panel, so integrable endpoint
/// singularities at breakpoints are never sampled exactly. Throws
/// QuadratureFailure when the panel budget is exhausted or the integrand
/// produces non-finite values.
double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double rtol, const std::vector<double>& breakpoints = {},
                   int max_panels = 200000);

/// Insert a dyadic mesh refining toward each point of `targets` (distance
/// halves down to `min_width`). Returns sorted panel boundaries for [a, b].
std::vector<double> geometric_mesh(double a, double b,
                                   const std::vector<double>& targets,
                                   double min_width = 1e-14);

/// Augment circle angles with their +-2pi translates so meshes on [0, 2pi]
/// refine correctly toward points near the wrap-around.
std::vector<double> circle_targets(const std::vector<double>& angles);

/// Composite 15-point Gauss-Legendre over an explicit mesh, no adaptivity.
/// Intended for integrable log-type singularities on a geometric mesh.
double composite_gl(const std::function<double(double)>& f,
                    const std::vector<double>& mesh);

}  // namespace hb::quad
