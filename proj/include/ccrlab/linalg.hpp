#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ccr {

using cplx = std::complex<double>;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Inner product linear in the first argument: <u, v> = sum_i u_i conj(v_i).
/// Every Gram condition and Weyl phase in the library uses this convention.
cplx inner(const CVector& u, const CVector& v);

/// Largest singular value.
double op_norm(const CMatrix& m);
double op_norm(const RMatrix& m);

/// max |m - m^*| entrywise.
double hermiticity_residual(const CMatrix& m);

/// ||m^* m - I|| in operator norm.
double unitarity_residual(const CMatrix& m);

/// exp(i t a) for Hermitian a via eigendecomposition; throws EigensolveFailure.
CMatrix hermitian_exp(const CMatrix& a, double t);

} // namespace ccr
