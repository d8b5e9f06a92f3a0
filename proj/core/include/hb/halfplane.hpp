#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hb/schur.hpp"
#include "hb/types.hpp"

namespace hb {

/// Conformal map from the upper half-plane onto the disc, gamma(w) = (w-i)/(w+i).
Complex cayley(Complex w);
/// Inverse map, i (1+z)/(1-z).
Complex cayley_inverse(Complex z);

/// b1 = b o gamma on the upper half-plane, with its derivative by the chain
/// rule. The boundary derivative is available in closed form for inner specs.
class HalfPlaneFunction {
  public:
    explicit HalfPlaneFunction(SchurSpec spec);

    Complex operator()(Complex w) const;
    Complex derivative(Complex w) const;

    /// |b1'(x)| directly on the real axis (inner specs, away from the real
    /// images of atoms and of boundary zero accumulation).
    Complex boundary_derivative(double x) const;

    const SchurSpec& spec() const { return spec_; }

  private:
    SchurSpec spec_;
};

HalfPlaneFunction transfer_function(const SchurSpec& spec);

/// A function on the disc with the data the Toeplitz closed forms need.
struct DiscFunction {
    std::string name;
    std::function<Complex(Complex)> eval;
    Complex at_zero{};
};

/// The unitary from L2(T) onto L2(R): (1/sqrt(pi)) (x+i)^{-1} f(gamma(x)).
Complex apply_U(const DiscFunction& f, double x);
/// Analytic extension of Uf to the upper half-plane (same formula).
Complex apply_U_analytic(const DiscFunction& f, Complex w);

/// ||f||^2 on L2(T) by node-doubling trapezoid.
double disc_l2_norm_sq(const DiscFunction& f, double rtol = 1e-8);
/// ||g||^2 on L2(R) by the exact circle substitution x = -cot(phi/2),
/// midpoint-sampled so the wrap point is never evaluated.
double halfplane_l2_norm_sq(const std::function<Complex(double)>& g,
                            double rtol = 1e-8);

/// Symbols with closed-form Toeplitz action on rational data.
enum class ToeplitzSymbol { One, Shift, Backshift };

/// Max over the samples of |U(T_phi f) - T_{phi o gamma}(U f)|.
double verify_intertwining(ToeplitzSymbol symbol, const DiscFunction& f,
                           const std::vector<double>& sample_points);

struct BernsteinReport {
    enum class Verdict { Holds, FailsNotInner, FailsUnbounded, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    double sup_derivative = 0.0;
    /// (Im w level, grid sup) pairs, finest last; level 0 is the real axis.
    std::vector<std::pair<double, double>> level_sups;
    std::string evidence;
};

std::string to_string(BernsteinReport::Verdict v);

/// Criterion for the half-plane Bernstein property: b1 inner with b1'
/// bounded. Inner <=> no outer part within the representable class; the sup
/// is estimated on Im w = 10^{-k} grids plus the real axis itself.
BernsteinReport bernstein_check(const SchurSpec& spec);

}  // namespace hb
