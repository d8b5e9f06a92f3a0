#include "hb/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hb/errors.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// d^q/dz^q z^n, evaluated at z.
Complex dz_pow(int n, int q, Complex z) {
    if (q > n) return 0.0;
    return factorial(n) / factorial(n - q) * std::pow(z, n - q);
}

// d^p/dz^p (1 - wbar z)^j, evaluated at z.
Complex du_pow(Complex wbar, int j, int p, Complex z) {
    if (p > j) return 0.0;
    return factorial(j) / factorial(j - p) * std::pow(-wbar, p) *
           std::pow(1.0 - wbar * z, j - p);
}

}  // namespace

Complex kernel(const SchurSpec& spec, Complex lambda, Complex z) {
    if (std::abs(lambda) >= 1.0 || std::abs(z) >= 1.0)
        throw DomainError("kernel: both points must be interior");
    const Complex bl = eval_b(spec, lambda);
    const Complex bz = eval_b(spec, z);
    return (1.0 - std::conj(bl) * bz) / (1.0 - std::conj(lambda) * z);
}

Complex DerivativeKernel::numerator(const SchurSpec& spec, Complex z) const {
    const int N = order;
    const Complex wbar = std::conj(anchor);
    Complex sum = 0.0;
    for (int j = 0; j <= N; ++j) {
        sum += binomial(N, j) * conj_b_derivs[j] * factorial(N - j) *
               std::pow(z, N - j) * std::pow(1.0 - wbar * z, j);
    }
    return factorial(N) * std::pow(z, N) - eval_b(spec, z) * sum;
}

Complex DerivativeKernel::evaluate(const SchurSpec& spec, Complex z) const {
    const Complex wbar = std::conj(anchor);
    return numerator(spec, z) /
           std::pow(1.0 - wbar * z, denominator_exponent);
}

DerivativeKernel make_derivative_kernel(const SchurSpec& spec, Complex omega,
                                        int order) {
    if (order < 0) throw DomainError("derivative kernel order must be >= 0");
    DerivativeKernel dk;
    dk.order = order;
    dk.anchor = omega;
    dk.denominator_exponent = order + 1;
    const auto derivs = eval_b_derivatives(spec, omega, order);
    dk.conj_b_derivs.reserve(derivs.size());
    for (const Complex& d : derivs) dk.conj_b_derivs.push_back(std::conj(d));
    return dk;
}

Complex derivative_kernel(const SchurSpec& spec, Complex omega, int order,
                          Complex z) {
    return make_derivative_kernel(spec, omega, order).evaluate(spec, z);
}

NormSq kernel_norm_sq_detail(const SchurSpec& spec, Complex omega, int order) {
    if (std::abs(omega) >= 1.0)
        throw DomainError("kernel_norm_sq: omega must be interior");
    const int N = order;
    const Complex wbar = std::conj(omega);
    const double u0 = 1.0 - std::norm(omega);

    const EvalTrace bt = eval_b_traced(spec, omega);
    std::vector<Complex> bder;
    if (N == 0) {
        bder = {bt.value};
    } else {
        bder = eval_b_derivatives(spec, omega, N);
    }
    std::vector<Complex> cder(bder.size());
    for (size_t j = 0; j < bder.size(); ++j) cder[j] = std::conj(bder[j]);

    // g(z) = sum_j C(N,j) conj(b^{(j)}) (N-j)! z^{N-j} u^j with u = 1 - wbar z;
    // h = N! z^N - b g. Value and magnitude sums accumulate in parallel so a
    // cancellation-aware noise floor comes out of the same loops.
    auto g_deriv = [&](int p, Complex z, double& mag) {
        Complex s = 0.0;
        for (int j = 0; j <= N; ++j) {
            const double c = binomial(N, j) * factorial(N - j);
            Complex inner = 0.0;
            double inner_mag = 0.0;
            for (int q = 0; q <= p; ++q) {
                const Complex t = binomial(p, q) * dz_pow(N - j, q, z) *
                                  du_pow(wbar, j, p - q, z);
                inner += t;
                inner_mag += std::abs(t);
            }
            s += c * cder[j] * inner;
            mag += c * std::abs(cder[j]) * inner_mag;
        }
        return s;
    };
    auto h_deriv = [&](int m, Complex z, double& mag) {
        Complex t1 = factorial(N) * dz_pow(N, m, z);
        mag += std::abs(t1);
        Complex t2 = 0.0;
        for (int s = 0; s <= m; ++s) {
            double gmag = 0.0;
            const Complex gd = g_deriv(m - s, z, gmag);
            t2 += binomial(m, s) * bder[s] * gd;
            mag += binomial(m, s) * std::abs(bder[s]) * gmag;
        }
        return t1 - t2;
    };

    Complex total = 0.0;
    double mag_total = 0.0;
    for (int m = 0; m <= N; ++m) {
        double hmag = 0.0;
        const Complex hd = h_deriv(m, omega, hmag);
        const double coeff = binomial(N, m) * factorial(2 * N - m) / factorial(N);
        const Complex contrib =
            coeff * hd * std::pow(wbar, N - m) * std::pow(u0, -(2 * N + 1 - m));
        total += contrib;
        mag_total += coeff * hmag * std::pow(u0, -(2 * N + 1 - m));
    }

    NormSq out;
    out.value = total.real();
    out.imag_residue = std::fabs(total.imag());
    const double delta_b = std::max(bt.rel_err, 1e-12);
    out.noise_floor = (delta_b + 16.0 * kEps) * mag_total;
    out.reliable = out.noise_floor < 0.25 * std::max(std::fabs(out.value), 1e-300) &&
                   out.imag_residue <= 1e-8 * std::max(1.0, std::fabs(out.value));
    return out;
}

double kernel_norm_sq(const SchurSpec& spec, Complex omega, int order) {
    const NormSq n = kernel_norm_sq_detail(spec, omega, order);
    if (n.imag_residue > 1e-8 * std::max(1.0, std::fabs(n.value)))
        throw NotRealResult("kernel_norm_sq: imaginary residue above tolerance");
    if (n.value < 0.0) {
        if (-n.value <= std::max(n.noise_floor, 1e-12)) return 0.0;
        throw NotRealResult("kernel_norm_sq: negative value beyond noise floor");
    }
    return n.value;
}

double kernel_norm_sq_cauchy(const SchurSpec& spec, Complex omega, int order) {
    const DerivativeKernel dk = make_derivative_kernel(spec, omega, order);
    const double rho = (1.0 - std::abs(omega)) / 2.0;
    auto f = [&](Complex z) { return dk.evaluate(spec, z); };
    const auto ds = quad::cauchy_derivatives(f, omega, rho, order);
    const Complex v = ds.values[order];
    if (std::fabs(v.imag()) > 1e-8 * std::max(1.0, std::fabs(v.real())))
        throw NotRealResult("kernel_norm_sq_cauchy: imaginary residue above tolerance");
    return v.real();
}

std::string to_string(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::Bounded: return "bounded";
        case GrowthVerdict::Divergent: return "divergent";
        default: return "inconclusive";
    }
}

std::vector<double> default_radial_grid(int k_max) {
    std::vector<double> g;
    for (int k = 1; k <= k_max; ++k) g.push_back(1.0 - std::pow(10.0, -k));
    return g;
}

ProbeReport radial_norm_probe(const SchurSpec& spec, int order,
                              const std::vector<double>& grid) {
    ProbeReport rep;
    rep.order = order;
    for (double r : grid) {
        ProbeRow row;
        row.r = r;
        try {
            const NormSq n = kernel_norm_sq_detail(spec, Complex{r, 0.0}, order);
            row.value = n.value;
            row.reliable = n.reliable;
            if (!n.reliable)
                row.note = n.imag_residue > 1e-8 * std::max(1.0, std::fabs(n.value))
                               ? "imaginary residue"
                               : "noise floor";
        } catch (const Error& e) {
            row.value = std::numeric_limits<double>::quiet_NaN();
            row.reliable = false;
            row.note = e.what();
        }
        rep.rows.push_back(std::move(row));
    }

    std::vector<double> vals;
    for (const auto& row : rep.rows)
        if (row.reliable) vals.push_back(std::max(row.value, 0.0));
    if (vals.size() < 3) {
        rep.verdict = GrowthVerdict::Inconclusive;
        rep.evidence = "fewer than three reliable grid points";
        return rep;
    }

    const double tiny = 1e-12;
    rep.growth_ratio = vals.back() / std::max(vals.front(), tiny);
    if (*std::max_element(vals.begin(), vals.end()) <= tiny) {
        rep.verdict = GrowthVerdict::Bounded;  // identically-zero probe
        rep.growth_ratio = 1.0;
        rep.evidence = "all values negligible";
        return rep;
    }

    const size_t n = vals.size();
    auto close = [&](double x, double y) {
        return std::fabs(x - y) <= 0.05 * std::max({std::fabs(x), std::fabs(y), tiny});
    };
    const bool plateau = close(vals[n - 3], vals[n - 2]) &&
                         close(vals[n - 2], vals[n - 1]) &&
                         close(vals[n - 3], vals[n - 1]);
    std::ostringstream ev;
    if (plateau) {
        rep.verdict = GrowthVerdict::Bounded;
        ev << "last three values agree pairwise within 5%";
    } else if (rep.growth_ratio > 10.0) {
        rep.verdict = GrowthVerdict::Divergent;
        ev << "growth ratio " << rep.growth_ratio << " across the grid";
    } else {
        rep.verdict = GrowthVerdict::Inconclusive;
        ev << "no plateau, growth ratio " << rep.growth_ratio << " <= 10";
    }
    rep.evidence = ev.str();
    return rep;
}

}  // namespace hb
