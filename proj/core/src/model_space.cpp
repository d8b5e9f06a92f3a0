#include "hb/model_space.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "hb/errors.hpp"
#include "hb/kernels.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {

Complex blaschke_factor(Complex a, Complex z) {
    if (a == Complex{0.0, 0.0}) return z;
    return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

// <f, g> on H^2 by the trapezoid mean of f conj(g) over T, node-doubling
// 256 -> 4096 with 1e-10 agreement. Integrands here are rational with poles
// off T, so the trapezoid converges geometrically.
Complex boundary_inner(const std::function<Complex(Complex)>& f,
                       const std::function<Complex(Complex)>& g, int nodes) {
    auto integrand = [&](double t) {
        const Complex z = unit_point(t);
        return f(z) * std::conj(g(z));
    };
    return quad::circle_mean(integrand, nodes);
}

int settle_node_count(const std::function<Complex(Complex)>& f,
                      const std::function<Complex(Complex)>& g) {
    int n = 256;
    Complex prev = boundary_inner(f, g, n);
    while (n < 4096) {
        n *= 2;
        const Complex cur = boundary_inner(f, g, n);
        if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur)))
            return n;
        prev = cur;
    }
    throw QuadratureFailure("model space: boundary quadrature did not settle");
}

}  // namespace

ModelSpaceRep::ModelSpaceRep(SchurSpec spec, std::vector<Complex> zeros)
    : spec_(std::move(spec)), zeros_(std::move(zeros)) {}

Complex ModelSpaceRep::basis_value(int k, Complex z) const {
    Complex out = std::sqrt(1.0 - std::norm(zeros_[k])) /
                  (1.0 - std::conj(zeros_[k]) * z);
    for (int j = 0; j < k; ++j) out *= blaschke_factor(zeros_[j], z);
    return out;
}

Complex ModelSpaceRep::evaluate(const Eigen::VectorXcd& coeffs,
                                Complex z) const {
    Complex out = 0.0;
    for (int k = 0; k < dim(); ++k) out += coeffs(k) * basis_value(k, z);
    return out;
}

Eigen::VectorXcd ModelSpaceRep::kernel_coeffs_exact(Complex lambda) const {
    Eigen::VectorXcd c(dim());
    for (int k = 0; k < dim(); ++k) c(k) = std::conj(basis_value(k, lambda));
    return c;
}

std::vector<Complex> ModelSpaceRep::xstar_eigenvalues() const {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(xstar_, false);
    std::vector<Complex> out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = es.eigenvalues()(i);
    return out;
}

ModelSpaceRep ModelSpaceRep::build(const SchurSpec& spec) {
    if (!spec.is_finite_blaschke())
        throw DomainError("model space requires a finite Blaschke spec");
    const auto& zeros = spec.zeros();
    if (zeros.empty())
        throw DomainError("model space requires at least one zero");
    for (size_t i = 0; i < zeros.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (std::abs(zeros[i] - zeros[j]) < 1e-12)
                throw RepeatedZeros("model space: repeated zeros rejected");

    ModelSpaceRep rep(spec, zeros);
    const int n = rep.dim();

    rep.raw_gram_.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rep.raw_gram_(i, j) = 1.0 / (1.0 - std::conj(zeros[j]) * zeros[i]);

    const Complex b0 = eval_b(spec, Complex{0.0, 0.0});
    auto b_on_t = [&](Complex z) { return eval_b_boundary(spec, std::arg(z)); };
    auto sstar_b = [&](Complex z) { return (b_on_t(z) - b0) / z; };
    auto basis = [&](int k) {
        return [&rep, k](Complex z) { return rep.basis_value(k, z); };
    };

    rep.nodes_ = settle_node_count(basis(0), basis(0));
    // All integrands share the same pole structure; reuse the settled count,
    // with one representative re-check on the densest column.
    rep.nodes_ = std::max(rep.nodes_, settle_node_count(basis(n - 1), b_on_t));

    rep.xstar_.resize(n, n);
    for (int k = 0; k < n; ++k) {
        const Complex ck = boundary_inner(basis(k), sstar_b, rep.nodes_);
        auto xstar_ek = [&](Complex z) {
            return z * rep.basis_value(k, z) - ck * b_on_t(z);
        };
        for (int j = 0; j < n; ++j)
            rep.xstar_(j, k) = boundary_inner(xstar_ek, basis(j), rep.nodes_);
    }
    return rep;
}

KernelInModel kernel_in_model(const ModelSpaceRep& rep, Complex lambda) {
    if (std::abs(lambda) >= 1.0)
        throw DomainError("kernel_in_model: lambda must be interior");
    const int n = rep.dim();
    KernelInModel out;

    auto klam = [&](Complex z) {
        return (1.0 - std::conj(eval_b(rep.spec(), lambda)) *
                          eval_b_boundary(rep.spec(), std::arg(z))) /
               (1.0 - std::conj(lambda) * z);
    };
    out.projection.resize(n);
    for (int j = 0; j < n; ++j) {
        auto ej = [&](Complex z) { return rep.basis_value(j, z); };
        out.projection(j) = boundary_inner(klam, ej, rep.quadrature_nodes());
    }

    const Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(n, n) - std::conj(lambda) * rep.xstar();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    const Eigen::VectorXcd k0 = rep.kernel_coeffs_exact(Complex{0.0, 0.0});
    out.resolvent = lu.solve(k0);
    const double resid = (A * out.resolvent - k0).norm();
    if (!out.resolvent.allFinite() || resid > 1e-6 * std::max(1.0, k0.norm()))
        throw SingularResolvent("kernel_in_model: resolvent solve failed");

    out.max_coeff_diff = (out.projection - out.resolvent).cwiseAbs().maxCoeff();
    return out;
}

Eigen::VectorXcd derivative_kernel_resolvent(const ModelSpaceRep& rep,
                                             Complex omega, int order) {
    if (std::abs(omega) >= 1.0)
        throw DomainError("derivative_kernel_resolvent: omega must be interior");
    const int n = rep.dim();
    const Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(n, n) - std::conj(omega) * rep.xstar();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);

    Eigen::VectorXcd v = rep.kernel_coeffs_exact(Complex{0.0, 0.0});
    for (int p = 0; p < order; ++p) v = rep.xstar() * v;
    double fact = 1.0;
    for (int p = 2; p <= order; ++p) fact *= p;
    for (int p = 0; p <= order; ++p) v = lu.solve(v);
    if (!v.allFinite())
        throw SingularResolvent("derivative_kernel_resolvent: solve failed");
    return fact * v;
}

RangeTestResult range_test(const ModelSpaceRep& rep, Complex zeta0,
                           int order) {
    if (std::fabs(std::abs(zeta0) - 1.0) > 1e-12)
        throw DomainError("range_test: zeta0 must lie on the unit circle");
    const int n = rep.dim();
    const Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(n, n) - std::conj(zeta0) * rep.xstar();

    Eigen::VectorXcd rhs = rep.kernel_coeffs_exact(Complex{0.0, 0.0});
    for (int p = 0; p < order; ++p) rhs = rep.xstar() * rhs;

    Eigen::MatrixXcd Apow = Eigen::MatrixXcd::Identity(n, n);
    for (int p = 0; p <= order; ++p) Apow = Apow * A;

    RangeTestResult out;
    out.witness = Apow.fullPivLu().solve(rhs);
    out.residual = (Apow * out.witness - rhs).norm();
    out.in_range = out.witness.allFinite() &&
                   out.residual <= 1e-8 * std::max(1.0, rhs.norm());
    return out;
}

double verify_xstar_identity(const ModelSpaceRep& rep) {
    const auto& spec = rep.spec();
    const int n = rep.dim();
    const Complex b0 = eval_b(spec, Complex{0.0, 0.0});
    double max_resid = 0.0;
    const int grid = 512;
    for (int k = 0; k < n; ++k) {
        auto ek = [&](Complex z) { return rep.basis_value(k, z); };
        auto sstar_b = [&](Complex z) {
            return (eval_b_boundary(spec, std::arg(z)) - b0) / z;
        };
        const Complex ck = boundary_inner(ek, sstar_b, rep.quadrature_nodes());
        for (int m = 0; m < grid; ++m) {
            const Complex z = unit_point(kTwoPi * m / grid);
            const Complex rhs =
                z * rep.basis_value(k, z) - ck * eval_b_boundary(spec, std::arg(z));
            Complex lhs = 0.0;
            for (int j = 0; j < n; ++j)
                lhs += rep.xstar()(j, k) * rep.basis_value(j, z);
            max_resid = std::max(max_resid, std::abs(lhs - rhs));
        }
    }
    return max_resid;
}

}  // namespace hb
