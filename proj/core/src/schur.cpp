#include "hb/schur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hb/errors.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {

constexpr double kBoundaryBand = 1e-14;

Complex blaschke_factor(Complex a, Complex z) {
    if (a == Complex{0.0, 0.0}) return z;
    return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

double stable_log_abs_cos_half(double theta) {
    // log|cos(theta/2)| = log1p(-2 sin^2(s/4)) with s the distance to the
    // nearest even multiple of 2pi; exact for tiny s where cos rounds to 1.
    const double t = wrap_angle(theta);
    const double s = std::min(t, kTwoPi - t);
    const double u = 2.0 * std::sin(s / 4.0) * std::sin(s / 4.0);
    return std::log1p(-u);
}

}  // namespace

std::string to_string(Verdict3 v) {
    switch (v) {
        case Verdict3::Finite: return "finite";
        case Verdict3::Diverges: return "diverges";
        default: return "inconclusive";
    }
}

std::vector<Complex> ZeroFamily::generate() const {
    std::vector<Complex> out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) {
        const double m = 1.0 - std::pow(n, -modulus_exponent);
        const double arg =
            accumulation_angle + std::pow(n, -argument_exponent);
        out.push_back(std::polar(m, arg));
    }
    return out;
}

double ZeroFamily::tail_exponent_at_accumulation(int order) const {
    // Terms (1-|a_n|^2)/|zeta0-a_n|^{2N+2} ~ 2 n^{-p} at the accumulation
    // point, with |zeta0 - a_n| ~ n^{-min(alpha, beta)}.
    const double near = std::min(modulus_exponent, argument_exponent);
    return modulus_exponent - 2.0 * (order + 1) * near;
}

Verdict3 OuterPart::criterion_flag(double theta0, int order) const {
    for (const auto& ov : overrides) {
        if (same_angle(ov.angle, theta0))
            return order <= ov.max_finite_order ? Verdict3::Finite
                                                : Verdict3::Diverges;
    }
    return density.criterion_flag ? density.criterion_flag(theta0, order)
                                  : Verdict3::Inconclusive;
}

const OuterDensity& outer_density(const std::string& id) {
    static const std::vector<OuterDensity> registry = [] {
        std::vector<OuterDensity> r;

        // b = (1+z)/2: w(theta) = log|cos(theta/2)|. Vanishes to second
        // order at theta = 0, so the criterion kernel |1-e^{it}|^{-(2N+2)}
        // is integrable there exactly for N = 0.
        OuterDensity halfcos;
        halfcos.id = "log-cos-half";
        halfcos.log_modulus = stable_log_abs_cos_half;
        halfcos.singular_angles = {kPi};
        halfcos.zero_angles = {0.0};
        halfcos.criterion_flag = [](double theta0, int order) {
            if (same_angle(theta0, 0.0))
                return order == 0 ? Verdict3::Finite : Verdict3::Diverges;
            return Verdict3::Diverges;  // w(theta0) != 0
        };
        halfcos.log_gap_integrable = Verdict3::Finite;
        r.push_back(std::move(halfcos));

        // b == 1/2: constant log-modulus, |w| bounded away from zero.
        OuterDensity half;
        half.id = "log-half";
        half.log_modulus = [](double) { return -std::log(2.0); };
        half.criterion_flag = [](double, int) { return Verdict3::Diverges; };
        half.log_gap_integrable = Verdict3::Finite;
        r.push_back(std::move(half));

        return r;
    }();
    for (const auto& d : registry)
        if (d.id == id) return d;
    throw ParseError("unknown outer density id '" + id + "'");
}

std::vector<std::string> outer_density_ids() {
    return {"log-cos-half", "log-half"};
}

SchurSpec::SchurSpec(SchurData data) : data_(std::move(data)) {
    if (std::fabs(std::abs(data_.gamma) - 1.0) > 1e-12)
        throw DomainError("gamma must be unimodular (|gamma| = 1 to 1e-12)");
    data_.gamma /= std::abs(data_.gamma);

    if (data_.zero_family && !data_.zeros.empty())
        throw DomainError("give either an explicit zero list or a zero family, not both");

    if (data_.zero_family) {
        const auto& fam = *data_.zero_family;
        if (fam.count < 1) throw DomainError("zero family count must be >= 1");
        if (fam.modulus_exponent <= 1.0)
            throw DomainError("zero family violates the Blaschke condition (modulus exponent must exceed 1)");
        if (fam.argument_exponent <= 0.0)
            throw DomainError("zero family argument exponent must be positive");
        zeros_ = fam.generate();
        double tail = 0.0;
        for (int n = fam.count / 2 + 1; n <= fam.count; ++n)
            tail += std::pow(n, -fam.modulus_exponent);
        blaschke_tail_ = tail;
    } else {
        zeros_ = data_.zeros;
    }

    for (const Complex& a : zeros_)
        if (std::abs(a) >= 1.0)
            throw DomainError("Blaschke zeros must lie in the open unit disc");

    for (size_t i = 0; i < data_.atoms.size(); ++i) {
        auto& atom = data_.atoms[i];
        if (!(atom.weight > 0.0)) {
            std::ostringstream os;
            os << "atom " << i << ": weight must be strictly positive";
            throw DomainError(os.str());
        }
        atom.angle = wrap_angle(atom.angle);
        for (size_t j = 0; j < i; ++j)
            if (same_angle(atom.angle, data_.atoms[j].angle))
                throw DomainError("atom angles must be pairwise distinct");
    }

    if (data_.outer) {
        const auto& w = data_.outer->density.log_modulus;
        if (!w) throw DomainError("outer density has no log-modulus handle");
        for (int k = 0; k < 720; ++k) {
            const double th = kTwoPi * (k + 0.37) / 720.0;
            const double v = w(th);
            if (std::isnan(v) || v > 1e-12)
                throw DomainError("outer log-modulus must be <= 0 wherever sampled");
        }
    }
}

std::string SchurSpec::describe() const {
    std::ostringstream os;
    os << "gamma=(" << data_.gamma.real() << "," << data_.gamma.imag() << ")";
    if (data_.zero_family) {
        const auto& f = *data_.zero_family;
        os << ", zero family alpha=" << f.modulus_exponent
           << " beta=" << f.argument_exponent << " count=" << f.count
           << " (blaschke tail increment " << blaschke_tail_ << ")";
    } else {
        os << ", " << zeros_.size() << " zeros";
    }
    os << ", " << data_.atoms.size() << " atoms";
    os << (data_.outer ? ", outer density " + data_.outer->density.id
                       : std::string(", no outer part"));
    return os.str();
}

namespace {

struct FactorAccumulator {
    Complex value{1.0, 0.0};
    double rel_err_sq = 0.0;     // Blaschke factors, relative
    double exponent_abs_err = 0.0;  // singular/outer exponent, absolute

    void mul_blaschke(Complex a, Complex z) {
        value *= blaschke_factor(a, z);
        if (a != Complex{0.0, 0.0}) {
            const double num = (std::abs(a) + std::abs(z)) / std::abs(a - z);
            const double den =
                (1.0 + std::abs(a) * std::abs(z)) / std::abs(1.0 - std::conj(a) * z);
            rel_err_sq += kEps * kEps * (num * num + den * den + 3.0);
        }
    }

    double rel_err() const {
        return std::sqrt(rel_err_sq) + exponent_abs_err;
    }
};

Complex herglotz_kernel(Complex zeta, Complex z) {
    return (zeta + z) / (zeta - z);
}

// Interior evaluation with error accumulation.
FactorAccumulator eval_interior(const SchurSpec& spec, Complex z) {
    FactorAccumulator acc;
    acc.value = spec.gamma();
    for (const Complex& a : spec.zeros()) acc.mul_blaschke(a, z);

    Complex exponent = 0.0;
    for (const Atom& atom : spec.atoms()) {
        const Complex zeta = unit_point(atom.angle);
        const Complex term = atom.weight * herglotz_kernel(zeta, z);
        exponent -= term;
        acc.exponent_abs_err +=
            kEps * std::abs(term) * (1.0 + 2.0 / std::abs(zeta - z));
    }

    if (spec.outer()) {
        const auto& dens = spec.outer()->density;
        const double rtol = 1e-9;
        auto real_part = [&](double t) {
            return (herglotz_kernel(unit_point(t), z) * dens.log_modulus(t)).real();
        };
        auto imag_part = [&](double t) {
            return (herglotz_kernel(unit_point(t), z) * dens.log_modulus(t)).imag();
        };
        std::vector<double> splits = dens.singular_angles;
        for (double za : dens.zero_angles) splits.push_back(za);
        // The Herglotz kernel peaks near arg(z); make sure panels align there.
        splits.push_back(wrap_angle(std::arg(z)));
        std::sort(splits.begin(), splits.end());
        const double re = quad::adaptive_gl(real_part, 0.0, kTwoPi, rtol, splits) / kTwoPi;
        const double im = quad::adaptive_gl(imag_part, 0.0, kTwoPi, rtol, splits) / kTwoPi;
        exponent += Complex{re, im};
        acc.exponent_abs_err += rtol * (std::fabs(re) + std::fabs(im)) + 4.0 * kEps;
    }

    acc.value *= std::exp(exponent);
    return acc;
}

}  // namespace

EvalTrace eval_b_traced(const SchurSpec& spec, Complex z) {
    const double r = std::abs(z);
    if (std::fabs(r - 1.0) < kBoundaryBand)
        throw DomainError("eval_b: z on the unit circle; use eval_b_boundary");
    if (r < 1.0) {
        const FactorAccumulator acc = eval_interior(spec, z);
        return {acc.value, acc.rel_err()};
    }
    // Exterior: reflect through the circle.
    const Complex w = 1.0 / std::conj(z);
    for (const Complex& a : spec.zeros()) {
        if (a == Complex{0.0, 0.0}) continue;
        if (std::abs(z - 1.0 / std::conj(a)) < 1e-12)
            throw PoleAtReflectedZero("eval_b: z is a pole (reflected zero)");
    }
    const FactorAccumulator acc = eval_interior(spec, w);
    if (acc.value == Complex{0.0, 0.0})
        throw PoleAtReflectedZero("eval_b: reflected interior value vanishes");
    return {1.0 / std::conj(acc.value), acc.rel_err()};
}

Complex eval_b(const SchurSpec& spec, Complex z) {
    return eval_b_traced(spec, z).value;
}

Complex eval_b_boundary(const SchurSpec& spec, double theta) {
    if (spec.outer())
        throw DomainError("eval_b_boundary: limit expression requires an inner spec");
    const Complex z = unit_point(theta);
    Complex out = spec.gamma();
    for (const Complex& a : spec.zeros()) out *= blaschke_factor(a, z);
    Complex exponent = 0.0;
    for (const Atom& atom : spec.atoms()) {
        if (same_angle(atom.angle, theta))
            throw DomainError("eval_b_boundary: theta coincides with an atom");
        exponent -= atom.weight * herglotz_kernel(unit_point(atom.angle), z);
    }
    return out * std::exp(exponent);
}

double boundary_log_modulus(const SchurSpec& spec, double theta) {
    if (!spec.outer()) return 0.0;
    return spec.outer()->density.log_modulus(theta);
}

std::vector<Complex> eval_b_derivatives(const SchurSpec& spec, Complex omega,
                                        int max_order) {
    if (std::abs(omega) >= 1.0)
        throw DomainError("eval_b_derivatives: omega must be interior");
    if (max_order < 0)
        throw DomainError("eval_b_derivatives: order must be >= 0");
    if (max_order == 0) return {eval_b(spec, omega)};

    const double rho = (1.0 - std::abs(omega)) / 2.0;
    auto f = [&](Complex xi) { return eval_b(spec, xi); };
    return quad::cauchy_derivatives(f, omega, rho, max_order).values;
}

Complex inner_log_derivative(const SchurSpec& spec, Complex z) {
    if (spec.outer())
        throw DomainError("inner_log_derivative: requires an inner spec");
    Complex acc = 0.0;
    for (const Complex& a : spec.zeros()) {
        if (a == Complex{0.0, 0.0}) {
            acc += 1.0 / z;
        } else {
            // d/dz log[(a-z)/(1-conj(a)z)] = -(1-|a|^2) / ((1-conj(a)z)(a-z))
            acc -= (1.0 - std::norm(a)) /
                   ((1.0 - std::conj(a) * z) * (a - z));
        }
    }
    for (const Atom& atom : spec.atoms()) {
        const Complex zeta = unit_point(atom.angle);
        acc -= 2.0 * atom.weight * zeta / ((zeta - z) * (zeta - z));
    }
    return acc;
}

std::vector<Complex> real_interval_trace(const SchurSpec& spec,
                                         const std::vector<double>& r_grid) {
    std::vector<Complex> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) {
        if (!(r >= 0.0 && r < 1.0))
            throw DomainError("real_interval_trace: grid must lie in [0, 1)");
        out.push_back(eval_b(spec, Complex{r, 0.0}));
    }
    return out;
}

SchurSpec rotate(const SchurSpec& spec, double phi) {
    SchurData d;
    const Complex ph = unit_point(phi);
    // Zeros at the origin keep the factor z; its phase shift folds into gamma.
    int origin_multiplicity = 0;
    if (spec.family()) {
        ZeroFamily fam = *spec.family();
        fam.accumulation_angle = wrap_angle(fam.accumulation_angle + phi);
        d.zero_family = fam;
        for (const Complex& a : spec.zeros())
            if (a == Complex{0.0, 0.0}) ++origin_multiplicity;
    } else {
        for (const Complex& a : spec.zeros()) {
            if (a == Complex{0.0, 0.0}) {
                ++origin_multiplicity;
                d.zeros.push_back(a);
            } else {
                d.zeros.push_back(ph * a);
            }
        }
    }
    d.gamma = spec.gamma() * std::pow(unit_point(-phi), origin_multiplicity);
    for (const Atom& atom : spec.atoms())
        d.atoms.push_back({wrap_angle(atom.angle + phi), atom.weight});
    if (spec.outer()) {
        OuterPart outer = *spec.outer();
        OuterDensity rotated = outer.density;
        auto base = outer.density.log_modulus;
        rotated.log_modulus = [base, phi](double t) { return base(t - phi); };
        rotated.singular_angles.clear();
        for (double s : outer.density.singular_angles)
            rotated.singular_angles.push_back(wrap_angle(s + phi));
        rotated.zero_angles.clear();
        for (double s : outer.density.zero_angles)
            rotated.zero_angles.push_back(wrap_angle(s + phi));
        auto base_flag = outer.density.criterion_flag;
        rotated.criterion_flag = [base_flag, phi](double theta0, int order) {
            return base_flag ? base_flag(theta0 - phi, order)
                             : Verdict3::Inconclusive;
        };
        OuterPart rotated_part;
        rotated_part.density = std::move(rotated);
        for (const auto& ov : outer.overrides)
            rotated_part.overrides.push_back(
                {wrap_angle(ov.angle + phi), ov.max_finite_order});
        d.outer = std::move(rotated_part);
    }
    return SchurSpec(std::move(d));
}

SchurSpec normalize_boundary_point(const SchurSpec& spec, double theta0) {
    return rotate(spec, -theta0);
}

}  // namespace hb
