#pragma once

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/linalg.hpp"

namespace ccr {

/// Columns x_k of `x` satisfy 2 Im<x_l, x_k> = theta(k,l).
struct VectorSystem {
    RealAntisymMatrix theta;
    CMatrix x;
    /// Diagonal of the Gram matrix of the x_k.
    double shift_c = 0.0;

    int dim() const { return theta.dim(); }
};

/// z_k = x_k (+) y_k, realizing theta_prime on the doubled space while the
/// first d coordinates still realize theta.
struct DilationVectorSystem {
    VectorSystem base;
    RealAntisymMatrix theta_prime;
    CMatrix y;
    CMatrix z;

    int dim() const { return base.dim(); }
    /// ||theta_prime - theta||
    double gamma_norm() const;
};

/// X whose columns have Gram matrix G under the library convention:
/// <col_l, col_k> = G(l, k). Eigenvalues in [-1e-10, 0) are clamped to zero.
CMatrix psd_factor(const CMatrix& gram);

/// Gram matrix G(l, k) = <col_l, col_k>.
CMatrix gram_of(const CMatrix& vectors);

/// max_{k,l} |2 Im<col_l, col_k> - target(k,l)|.
double verify_gram(const CMatrix& vectors, const RealAntisymMatrix& target);

VectorSystem construct_theta_vectors(const RealAntisymMatrix& theta);

DilationVectorSystem extend_vectors(const VectorSystem& base, const RealAntisymMatrix& theta_prime);

} // namespace ccr
