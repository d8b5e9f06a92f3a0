#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hb/types.hpp"

namespace hb {

/// Tri-state verdict used wherever convergence may be undecidable.
enum class Verdict3 { Finite, Diverges, Inconclusive };

std::string to_string(Verdict3 v);

/// Parametric zero sequence a_n = (1 - n^{-alpha}) e^{i n^{-beta}} (rotated
/// by `accumulation_angle`), truncated at `count`. The exponents double as
/// the declared comparison data for criterion-sum verdicts.
struct ZeroFamily {
    double modulus_exponent = 2.0;   ///< alpha > 1 (Blaschke condition)
    double argument_exponent = 1.0;  ///< beta > 0
    int count = 0;
    double accumulation_angle = 0.0;

    std::vector<Complex> generate() const;

    /// Exponent p such that criterion terms at the accumulation point decay
    /// like n^{-p}; the declared comparison series is sum n^{-p}.
    double tail_exponent_at_accumulation(int order) const;
};

struct Atom {
    double angle = 0.0;   ///< in [0, 2pi)
    double weight = 0.0;  ///< > 0
};

/// Outer factor described by its boundary log-modulus w(theta) = log|b| <= 0,
/// with the analytic side data numerical quadrature cannot decide.
struct OuterDensity {
    std::string id;
    std::function<double(double)> log_modulus;

    std::vector<double> singular_angles;  ///< w = -inf (boundary zeros of b)
    std::vector<double> zero_angles;      ///< w = 0 (|b| = 1)

    /// Integrability of |w(t)| / |zeta0 - e^{it}|^{2N+2} near theta0.
    std::function<Verdict3(double theta0, int order)> criterion_flag;

    /// Whether the integral of log(1 - |b|) over T converges (finite value
    /// means b is NOT an extreme point of the unit ball).
    Verdict3 log_gap_integrable = Verdict3::Inconclusive;

    /// True when {|b| < 1} is essentially all of T, so its closure blocks
    /// every arc. All built-in densities have this property.
    bool modulus_below_one_dense = true;
};

/// Registry of built-in densities addressable from spec files.
const OuterDensity& outer_density(const std::string& id);
std::vector<std::string> outer_density_ids();

/// Per-point integrability override supplied by a spec file: the outer
/// criterion term at `angle` is Finite for order <= max_finite_order.
struct IntegrabilityOverride {
    double angle = 0.0;
    int max_finite_order = -1;
};

struct OuterPart {
    OuterDensity density;
    std::vector<IntegrabilityOverride> overrides;

    Verdict3 criterion_flag(double theta0, int order) const;
};

struct SchurData {
    Complex gamma{1.0, 0.0};
    std::vector<Complex> zeros;
    std::optional<ZeroFamily> zero_family;
    std::vector<Atom> atoms;
    std::optional<OuterPart> outer;
};

/// Immutable factorization data of a function b in the unit ball of H-inf:
/// unimodular constant, Blaschke zeros (explicit or generated family),
/// atomic singular measure, optional outer log-modulus density.
///
/// Validation happens at construction; all evaluation functions below are
/// pure and safe for concurrent use.
class SchurSpec {
  public:
    explicit SchurSpec(SchurData data);

    Complex gamma() const { return data_.gamma; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    const std::optional<ZeroFamily>& family() const { return data_.zero_family; }
    const std::vector<Atom>& atoms() const { return data_.atoms; }
    const std::optional<OuterPart>& outer() const { return data_.outer; }

    bool is_inner() const { return !data_.outer.has_value(); }
    bool is_finite_blaschke() const {
        return data_.atoms.empty() && !data_.outer && !data_.zero_family;
    }

    /// Partial-sum tail of sum (1 - |a_n|) over the last half of a generated
    /// family; diagnostic for the Blaschke condition, not a proof.
    double blaschke_tail_increment() const { return blaschke_tail_; }

    std::string describe() const;

  private:
    SchurData data_;
    std::vector<Complex> zeros_;  ///< explicit list or materialized family
    double blaschke_tail_ = 0.0;
};

/// Evaluation with a forward roundoff estimate, used by near-boundary
/// consumers to detect when cancellation has destroyed the value.
struct EvalTrace {
    Complex value;
    double rel_err;  ///< estimated relative error bound
};

/// Evaluate b off the unit circle. Exterior points use the reflection
/// identity b(z) = 1 / conj(b(1/conj(z))) through the interior formula.
Complex eval_b(const SchurSpec& spec, Complex z);
EvalTrace eval_b_traced(const SchurSpec& spec, Complex z);

/// Limit expression directly on T; valid for inner specs away from atoms.
Complex eval_b_boundary(const SchurSpec& spec, double theta);

/// log|b| on T (a.e.): the outer density value, or 0 for inner specs.
double boundary_log_modulus(const SchurSpec& spec, double theta);

/// b(omega), b'(omega), ..., b^{(max_order)}(omega) at an interior point by
/// Cauchy-integral differentiation on |xi - omega| = (1 - |omega|)/2.
std::vector<Complex> eval_b_derivatives(const SchurSpec& spec, Complex omega,
                                        int max_order);

/// b'(z)/b(z) in closed form for inner specs; valid wherever b is analytic
/// and nonzero (interior points off the zero set, and T away from atoms).
Complex inner_log_derivative(const SchurSpec& spec, Complex z);

/// Values of b along a radius toward the boundary point 1 (spec pre-rotated).
std::vector<Complex> real_interval_trace(const SchurSpec& spec,
                                         const std::vector<double>& r_grid);

/// Spec with all data rotated by phi: eval_b(rotated, z) = eval_b(spec,
/// e^{-i phi} z). Zeros at the origin fold a phase into gamma.
SchurSpec rotate(const SchurSpec& spec, double phi);

/// rotate(spec, -theta0): moves the probed boundary point e^{i theta0} to 1.
SchurSpec normalize_boundary_point(const SchurSpec& spec, double theta0);

}  // namespace hb
