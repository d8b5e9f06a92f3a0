#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hb/schur.hpp"
#include "hb/types.hpp"

namespace hb {

/// Exact finite-dimensional realization of H(b) for a finite Blaschke
/// product with distinct zeros: the Malmquist-Walsh orthonormal basis
///
///   e_k(z) = sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j<k} b_{a_j}(z),
///
/// the raw Cauchy-kernel Gram 1/(1 - conj(a_j) a_i) kept as a conditioning
/// cross-check, and the matrix of the adjoint backward-shift compression
/// assembled from X*h = Sh - <h, S*b> b by boundary quadrature.
class ModelSpaceRep {
  public:
    static ModelSpaceRep build(const SchurSpec& spec);

    int dim() const { return static_cast<int>(zeros_.size()); }
    const SchurSpec& spec() const { return spec_; }
    const Eigen::MatrixXcd& xstar() const { return xstar_; }
    const Eigen::MatrixXcd& raw_kernel_gram() const { return raw_gram_; }
    int quadrature_nodes() const { return nodes_; }

    Complex basis_value(int k, Complex z) const;
    Complex evaluate(const Eigen::VectorXcd& coeffs, Complex z) const;

    /// Coefficients of the reproducing kernel at lambda via the reproducing
    /// property itself: c_j = conj(e_j(lambda)).
    Eigen::VectorXcd kernel_coeffs_exact(Complex lambda) const;

    std::vector<Complex> xstar_eigenvalues() const;

  private:
    ModelSpaceRep(SchurSpec spec, std::vector<Complex> zeros);

    SchurSpec spec_;
    std::vector<Complex> zeros_;
    Eigen::MatrixXcd xstar_;
    Eigen::MatrixXcd raw_gram_;
    int nodes_ = 0;
};

/// Kernel coefficients by two independent routes: boundary-quadrature
/// projection and the resolvent identity (Id - conj(lambda) X*)^{-1} k_0.
struct KernelInModel {
    Eigen::VectorXcd projection;
    Eigen::VectorXcd resolvent;
    double max_coeff_diff = 0.0;
};

KernelInModel kernel_in_model(const ModelSpaceRep& rep, Complex lambda);

/// N! (Id - conj(omega) X*)^{-(N+1)} X*^N k_0 in basis coordinates.
Eigen::VectorXcd derivative_kernel_resolvent(const ModelSpaceRep& rep,
                                             Complex omega, int order);

struct RangeTestResult {
    bool in_range = false;
    Eigen::VectorXcd witness;
    double residual = 0.0;
};

/// Solves (Id - conj(zeta0) X*)^{N+1} w = X*^N k_0 for a boundary point.
RangeTestResult range_test(const ModelSpaceRep& rep, Complex zeta0, int order);

/// Max boundary residual of X*h = Sh - <h, S*b> b over the basis elements.
double verify_xstar_identity(const ModelSpaceRep& rep);

}  // namespace hb
