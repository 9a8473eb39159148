#include "ccrlab/gram_vectors.hpp"

#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

constexpr double hermitian_tol = 1e-10;
constexpr double psd_tol = 1e-10;

// cI - (i/2) theta: Hermitian with diagonal c and imaginary part -theta/2.
CMatrix shifted_gram(const RealAntisymMatrix& theta, double c)
{
    const int d = theta.dim();
    return cplx(c, 0.0) * CMatrix::Identity(d, d) - cplx(0.0, 0.5) * theta.entries().cast<cplx>();
}

} // namespace

double DilationVectorSystem::gamma_norm() const
{
    return operator_norm(theta_prime - base.theta);
}

CMatrix gram_of(const CMatrix& vectors)
{
    // <x_l, x_k> = sum_i x_il conj(x_ik)  =>  G = X^T conj(X).
    return vectors.transpose() * vectors.conjugate();
}

CMatrix psd_factor(const CMatrix& gram)
{
    if (gram.rows() != gram.cols()) throw Error(ErrorKind::NotHermitian, "Gram matrix is not square");
    const double herm = hermiticity_residual(gram);
    if (herm > hermitian_tol) {
        std::ostringstream os;
        os << "hermiticity residual " << herm;
        throw Error(ErrorKind::NotHermitian, os.str());
    }
    // With X = Lambda^{1/2} V^* from conj(G) = V Lambda V^*, the standard
    // Gram X^* X equals conj(G), so the convention Gram X^T conj(X) equals G.
    const CMatrix target = gram.conjugate();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (target + target.adjoint()));
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigensolveFailure, "eigensolve of Gram matrix failed");
    }
    Eigen::VectorXd lambda = es.eigenvalues();
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < -psd_tol) {
            std::ostringstream os;
            os << "eigenvalue " << lambda(i) << " below -" << psd_tol;
            throw Error(ErrorKind::NotPSD, os.str());
        }
        lambda(i) = std::sqrt(std::max(lambda(i), 0.0));
    }
    return lambda.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

double verify_gram(const CMatrix& vectors, const RealAntisymMatrix& target)
{
    if (vectors.cols() != target.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "column count differs from target dimension");
    }
    const CMatrix g = gram_of(vectors);
    double worst = 0.0;
    for (int k = 0; k < target.dim(); ++k) {
        for (int l = 0; l < target.dim(); ++l) {
            worst = std::max(worst, std::abs(2.0 * g(l, k).imag() - target(k, l)));
        }
    }
    return worst;
}

VectorSystem construct_theta_vectors(const RealAntisymMatrix& theta)
{
    const double c = operator_norm(theta) / 2.0 + 1.0;
    CMatrix x;
    try {
        x = psd_factor(shifted_gram(theta, c));
    } catch (const Error& e) {
        throw Error(ErrorKind::FactorizationFailure, e.what());
    }
    return VectorSystem{theta, std::move(x), c};
}

DilationVectorSystem extend_vectors(const VectorSystem& base, const RealAntisymMatrix& theta_prime)
{
    if (theta_prime.dim() != base.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "theta_prime and base theta differ in size");
    }
    const int d = base.dim();
    const RealAntisymMatrix gamma = theta_prime - base.theta;
    // Diagonal ||Gamma||/2 makes the Gram PSD since ||Gamma/2|| <= ||Gamma||/2.
    CMatrix y;
    try {
        y = psd_factor(shifted_gram(gamma, operator_norm(gamma) / 2.0));
    } catch (const Error& e) {
        throw Error(ErrorKind::FactorizationFailure, e.what());
    }
    CMatrix z(2 * d, d);
    z.topRows(d) = base.x;
    z.bottomRows(d) = y;
    return DilationVectorSystem{base, theta_prime, std::move(y), std::move(z)};
}

} // namespace ccr
