#include "hb/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "hb/errors.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {
const Complex kI{0.0, 1.0};
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

Complex cayley(Complex w) { return (w - kI) / (w + kI); }

Complex cayley_inverse(Complex z) { return kI * (1.0 + z) / (1.0 - z); }

HalfPlaneFunction::HalfPlaneFunction(SchurSpec spec) : spec_(std::move(spec)) {}

Complex HalfPlaneFunction::operator()(Complex w) const {
    return eval_b(spec_, cayley(w));
}

Complex HalfPlaneFunction::derivative(Complex w) const {
    const Complex z = cayley(w);
    const Complex gp = 2.0 * kI / ((w + kI) * (w + kI));
    if (std::abs(z) < 1.0) {
        const auto d = eval_b_derivatives(spec_, z, 1);
        return d[1] * gp;
    }
    return boundary_derivative(w.real());
}

Complex HalfPlaneFunction::boundary_derivative(double x) const {
    const Complex z = cayley(Complex{x, 0.0});
    const double theta = std::arg(z);
    const Complex bz = eval_b_boundary(spec_, theta);  // throws for outer specs
    const Complex gp = 2.0 * kI / ((Complex{x, 0.0} + kI) * (Complex{x, 0.0} + kI));
    return bz * inner_log_derivative(spec_, z) * gp;
}

HalfPlaneFunction transfer_function(const SchurSpec& spec) {
    return HalfPlaneFunction(spec);
}

Complex apply_U(const DiscFunction& f, double x) {
    return apply_U_analytic(f, Complex{x, 0.0});
}

Complex apply_U_analytic(const DiscFunction& f, Complex w) {
    return (1.0 / kSqrtPi) * (1.0 / (w + kI)) * f.eval(cayley(w));
}

double disc_l2_norm_sq(const DiscFunction& f, double rtol) {
    auto integrand = [&](double t) -> Complex {
        return std::norm(f.eval(unit_point(t)));
    };
    return quad::refined_circle_mean(integrand, rtol).value.real();
}

double halfplane_l2_norm_sq(const std::function<Complex(double)>& g,
                            double rtol) {
    // x = -cot(phi/2): dx = csc^2(phi/2)/2 dphi, covering R as phi runs over
    // (0, 2pi). Midpoint nodes keep phi = 0 (x = inf) unsampled.
    auto level = [&](int nodes) {
        double acc = 0.0;
        for (int m = 0; m < nodes; ++m) {
            const double phi = kTwoPi * (m + 0.5) / nodes;
            const double s = std::sin(phi / 2.0);
            const double x = -std::cos(phi / 2.0) / s;
            acc += std::norm(g(x)) / (2.0 * s * s);
        }
        return acc * kTwoPi / nodes;
    };
    int n = 256;
    double prev = level(n);
    while (n < 262144) {
        n *= 2;
        const double cur = level(n);
        if (std::fabs(cur - prev) <= rtol * std::max(1.0, std::fabs(cur)))
            return cur;
        prev = cur;
    }
    throw QuadratureFailure("halfplane_l2_norm_sq: no agreement at node cap");
}

namespace {

// Closed-form Toeplitz action on the disc for the supported symbols.
DiscFunction disc_toeplitz(ToeplitzSymbol symbol, const DiscFunction& f) {
    switch (symbol) {
        case ToeplitzSymbol::One:
            return f;
        case ToeplitzSymbol::Shift: {
            auto base = f.eval;
            return {"shift(" + f.name + ")",
                    [base](Complex z) { return z * base(z); },
                    Complex{0.0, 0.0}};
        }
        case ToeplitzSymbol::Backshift: {
            auto base = f.eval;
            const Complex f0 = f.at_zero;
            return {"backshift(" + f.name + ")",
                    [base, f0](Complex z) { return (base(z) - f0) / z; },
                    Complex{0.0, 0.0}};  // unused by the identities below
        }
    }
    throw UnsupportedSymbol("disc_toeplitz: symbol outside the closed-form set");
}

}  // namespace

double verify_intertwining(ToeplitzSymbol symbol, const DiscFunction& f,
                           const std::vector<double>& sample_points) {
    const DiscFunction tf = disc_toeplitz(symbol, f);
    double max_resid = 0.0;
    // (Uf)(i) in closed form: gamma(i) = 0.
    const Complex uf_at_i = (1.0 / kSqrtPi) * (1.0 / (2.0 * kI)) * f.at_zero;
    for (double x : sample_points) {
        const Complex lhs = apply_U(tf, x);
        Complex rhs;
        switch (symbol) {
            case ToeplitzSymbol::One:
                rhs = apply_U(f, x);
                break;
            case ToeplitzSymbol::Shift:
                // phi o gamma is inner on the half-plane: plain multiplication.
                rhs = cayley(Complex{x, 0.0}) * apply_U(f, x);
                break;
            case ToeplitzSymbol::Backshift: {
                // P_+[(x+i)/(x-i) g] = ((w+i) g(w) - 2i g(i)) / (w - i).
                const Complex xi{x, 1.0}, xmi{x, -1.0};
                rhs = (xi * apply_U(f, x) - 2.0 * kI * uf_at_i) / xmi;
                break;
            }
        }
        max_resid = std::max(max_resid, std::abs(lhs - rhs));
    }
    return max_resid;
}

std::string to_string(BernsteinReport::Verdict v) {
    using V = BernsteinReport::Verdict;
    switch (v) {
        case V::Holds: return "holds";
        case V::FailsNotInner: return "fails (not inner)";
        case V::FailsUnbounded: return "fails (derivative unbounded)";
        default: return "inconclusive";
    }
}

BernsteinReport bernstein_check(const SchurSpec& spec) {
    BernsteinReport rep;
    if (!spec.is_inner()) {
        rep.verdict = BernsteinReport::Verdict::FailsNotInner;
        rep.evidence = "outer part present: |b1| < 1 on a set of positive measure";
        return rep;
    }
    const HalfPlaneFunction b1(spec);

    // Real grid: circle-substitution images of a uniform angle grid, plus
    // geometric clusters around the real images of atoms and of the zero
    // family's accumulation point. The atom at angle 0 maps to infinity;
    // large |x| samples stand in for it.
    std::set<double> xs;
    xs.insert(0.0);
    for (int m = 0; m < 64; ++m) {
        const double phi = kTwoPi * (m + 0.5) / 64;
        xs.insert(-std::cos(phi / 2.0) / std::sin(phi / 2.0));
    }
    std::vector<double> singular_angles;
    for (const Atom& atom : spec.atoms()) singular_angles.push_back(atom.angle);
    if (spec.family())
        singular_angles.push_back(spec.family()->accumulation_angle);
    std::vector<double> excluded;
    for (double th : singular_angles) {
        if (same_angle(th, 0.0)) {
            for (int j = 0; j <= 6; ++j) {
                xs.insert(std::pow(10.0, j));
                xs.insert(-std::pow(10.0, j));
            }
            continue;
        }
        const double xa = (-std::cos(th / 2.0) / std::sin(th / 2.0));
        excluded.push_back(xa);
        for (int j = 0; j <= 8; ++j) {
            xs.insert(xa + std::pow(10.0, -j));
            xs.insert(xa - std::pow(10.0, -j));
        }
    }

    auto near_excluded = [&](double x) {
        for (double e : excluded)
            if (std::fabs(x - e) < 1e-9) return true;
        return false;
    };

    // Level 0: the real axis itself through the closed-form derivative,
    // followed by a local golden-section polish around the grid maximum so a
    // smooth interior peak is located to full precision.
    auto safe_bd = [&](double x) {
        try {
            return std::abs(b1.boundary_derivative(x));
        } catch (const Error&) {
            return 0.0;
        }
    };
    double boundary_sup = 0.0;
    double best_x = 0.0;
    for (double x : xs) {
        if (near_excluded(x)) continue;
        const double v = safe_bd(x);
        if (v > boundary_sup) {
            boundary_sup = v;
            best_x = x;
        }
    }
    {
        auto lo_it = xs.lower_bound(best_x);
        double span = 1.0;
        if (lo_it != xs.begin() && std::next(lo_it) != xs.end())
            span = std::max(best_x - *std::prev(lo_it), *std::next(lo_it) - best_x);
        double a = best_x - span, c = best_x + span;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = c - gr * (c - a), x2 = a + gr * (c - a);
        double f1 = safe_bd(x1), f2 = safe_bd(x2);
        for (int it = 0; it < 80 && c - a > 1e-12; ++it) {
            if (f1 < f2) {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (c - a);
                f2 = safe_bd(x2);
            } else {
                c = x2; x2 = x1; f2 = f1;
                x1 = c - gr * (c - a);
                f1 = safe_bd(x1);
            }
        }
        boundary_sup = std::max({boundary_sup, f1, f2});
    }
    rep.level_sups.emplace_back(0.0, boundary_sup);
    if (boundary_sup > 1e12) {
        rep.verdict = BernsteinReport::Verdict::FailsUnbounded;
        rep.sup_derivative = boundary_sup;
        rep.evidence = "real-axis grid sup exceeds 1e12 near a singular image";
        return rep;
    }

    double sup = boundary_sup;
    std::vector<double> interior_sups;
    for (int k = 1; k <= 6; ++k) {
        const double y = std::pow(10.0, -k);
        double level_sup = 0.0;
        for (double x : xs)
            level_sup = std::max(level_sup, std::abs(b1.derivative(Complex{x, y})));
        rep.level_sups.emplace_back(y, level_sup);
        interior_sups.push_back(level_sup);
        sup = std::max(sup, level_sup);
        if (sup > 1e12) {
            rep.verdict = BernsteinReport::Verdict::FailsUnbounded;
            std::ostringstream os;
            os << "grid sup exceeds 1e12 at Im w = " << y;
            rep.evidence = os.str();
            rep.sup_derivative = sup;
            return rep;
        }
    }
    rep.sup_derivative = sup;

    const double last = interior_sups[interior_sups.size() - 1];
    const double prev = interior_sups[interior_sups.size() - 2];
    const bool stabilized =
        last <= boundary_sup * (1.0 + 1e-9) ||
        std::fabs(last - prev) <= 1e-6 * std::max(1.0, last);
    if (stabilized) {
        rep.verdict = BernsteinReport::Verdict::Holds;
        std::ostringstream os;
        os << "sup grid stabilized at " << sup;
        rep.evidence = os.str();
    } else if (last > 2.0 * prev) {
        rep.verdict = BernsteinReport::Verdict::FailsUnbounded;
        rep.evidence = "grid sup still doubling at the finest level";
    } else {
        rep.verdict = BernsteinReport::Verdict::Inconclusive;
        rep.evidence = "grid sup still growing at the finest level";
    }
    return rep;
}

}  // namespace hb
