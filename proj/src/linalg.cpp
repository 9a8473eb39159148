#include "ccrlab/linalg.hpp"

#include "ccrlab/errors.hpp"

namespace ccr {

cplx inner(const CVector& u, const CVector& v)
{
    // Eigen's dot() conjugates its left operand, so swap to get linearity in u.
    return v.dot(u);
}

double op_norm(const CMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double op_norm(const RMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<RMatrix> svd(m);
    return svd.singularValues()(0);
}

double hermiticity_residual(const CMatrix& m)
{
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const CMatrix& m)
{
    const CMatrix defect = m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols());
    return op_norm(defect);
}

CMatrix hermitian_exp(const CMatrix& a, double t)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigensolveFailure, "self-adjoint eigensolver did not converge");
    }
    const Eigen::VectorXd& lambda = es.eigenvalues();
    CVector phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::polar(1.0, t * lambda(i));
    }
    const CMatrix& v = es.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

} // namespace ccr
