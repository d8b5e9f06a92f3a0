#pragma once

#include <string>
#include <vector>

#include "hb/schur.hpp"
#include "hb/types.hpp"

namespace hb {

/// Reproducing kernel of H(b): (1 - conj(b(lambda)) b(z)) / (1 - conj(lambda) z).
Complex kernel(const SchurSpec& spec, Complex lambda, Complex z);

/// The pair (h, (1 - conj(omega) z)^{N+1}) realizing the N-th conj-anchor
/// derivative of the reproducing kernel:
///
///   h(z) = N! z^N
///        - b(z) * sum_{j=0}^{N} C(N,j) conj(b^{(j)}(omega)) (N-j)! z^{N-j}
///                 (1 - conj(omega) z)^j
struct DerivativeKernel {
    int order = 0;
    Complex anchor{};
    std::vector<Complex> conj_b_derivs;  ///< conj(b^{(j)}(omega)), j = 0..N
    int denominator_exponent = 1;        ///< N + 1

    Complex numerator(const SchurSpec& spec, Complex z) const;
    Complex evaluate(const SchurSpec& spec, Complex z) const;
};

DerivativeKernel make_derivative_kernel(const SchurSpec& spec, Complex omega,
                                        int order);

Complex derivative_kernel(const SchurSpec& spec, Complex omega, int order,
                          Complex z);

/// ||d^N k_omega / d conj(omega)^N||^2 with numerical diagnostics.
struct NormSq {
    double value = 0.0;
    double imag_residue = 0.0;
    double noise_floor = 0.0;  ///< forward roundoff estimate
    bool reliable = true;
};

/// Closed-form evaluation: the N-th z-derivative of the derivative kernel at
/// z = omega, expanded by the Leibniz rule into b^{(j)}(omega) data. This
/// stays well conditioned far closer to the boundary than quadrature in z.
NormSq kernel_norm_sq_detail(const SchurSpec& spec, Complex omega, int order);

/// Throwing wrapper: NotRealResult when the imaginary residue exceeds 1e-8
/// (relative), which signals numerical breakdown near the boundary.
double kernel_norm_sq(const SchurSpec& spec, Complex omega, int order);

/// Independent route: Cauchy-integral z-differentiation of the derivative
/// kernel. Well conditioned at interior anchors; used as a cross-check.
double kernel_norm_sq_cauchy(const SchurSpec& spec, Complex omega, int order);

enum class GrowthVerdict { Bounded, Divergent, Inconclusive };

std::string to_string(GrowthVerdict v);

struct ProbeRow {
    double r = 0.0;
    double value = 0.0;
    bool reliable = true;
    std::string note;
};

struct ProbeReport {
    int order = 0;
    std::vector<ProbeRow> rows;
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
    double growth_ratio = 0.0;  ///< last / first over reliable rows
    std::string evidence;
};

/// Default radial grid 1 - 10^{-k}, k = 1..6.
std::vector<double> default_radial_grid(int k_max = 6);

/// Kernel-norm trace along a radius toward the boundary point 1 (the spec
/// must be pre-rotated). Verdict heuristics: bounded when the last three
/// reliable values agree pairwise within 5%; divergent when the value grows
/// by more than a factor 10 across the reliable rows.
ProbeReport radial_norm_probe(const SchurSpec& spec, int order,
                              const std::vector<double>& grid = default_radial_grid());

}  // namespace hb
