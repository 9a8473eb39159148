#include "ccrlab/group_perturbation.hpp"

#include <cmath>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

constexpr double inequality_slack = 1e-9;
constexpr int hypothesis_samples = 200;

void require_hermitian(const CMatrix& m, const char* name)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotHermitian, std::string(name) + " is not square");
    const double r = hermiticity_residual(m);
    if (r >= HermitianPair::hermitian_tol) {
        std::ostringstream os;
        os << name << " hermiticity residual " << r;
        throw Error(ErrorKind::NotHermitian, os.str());
    }
}

void diagonalize(const CMatrix& m, Eigen::VectorXd& spectrum, CMatrix& basis)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "generator eigensolve failed");
    spectrum = es.eigenvalues();
    basis = es.eigenvectors();
}

CMatrix exp_from_eigen(const Eigen::VectorXd& spectrum, const CMatrix& basis, double t)
{
    CVector phases(spectrum.size());
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) phases(i) = std::polar(1.0, t * spectrum(i));
    return basis * phases.asDiagonal() * basis.adjoint();
}

} // namespace

HermitianPair::HermitianPair(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b))
{
    require_hermitian(a_, "A");
    require_hermitian(b_, "B");
    if (a_.rows() != b_.rows()) throw Error(ErrorKind::DimensionMismatch, "A and B differ in size");
    diagonalize(a_, a_spectrum_, a_basis_);
    diagonalize(b_, b_spectrum_, b_basis_);
}

CMatrix HermitianPair::u(double t) const { return exp_from_eigen(a_spectrum_, a_basis_, t); }
CMatrix HermitianPair::v(double t) const { return exp_from_eigen(b_spectrum_, b_basis_, t); }

double HermitianPair::distance(double t) const
{
    return op_norm(CMatrix(u(t) - v(t)));
}

double HermitianPair::generator_gap() const
{
    return op_norm(CMatrix(a_ - b_));
}

CMatrix group_at(const CMatrix& a, double t)
{
    return hermitian_exp(a, t);
}

double lipschitz_audit(const HermitianPair& pair, const std::vector<double>& t_grid)
{
    double worst = 0.0;
    bool any = false;
    for (double t : t_grid) {
        if (t == 0.0) continue;
        any = true;
        worst = std::max(worst, pair.distance(t) / std::abs(t));
    }
    if (!any) throw Error(ErrorKind::EmptyGrid, "lipschitz_audit needs a nonzero grid point");
    return worst;
}

double difference_quotient(const HermitianPair& pair, double t)
{
    if (t == 0.0) throw Error(ErrorKind::ValidationError, "difference_quotient at t = 0");
    const CMatrix quotient = (pair.u(t) - pair.v(t)) / t;
    return op_norm(CMatrix(quotient - cplx(0.0, 1.0) * (pair.a() - pair.b())));
}

double recovered_generator_gap(const HermitianPair& pair, double t)
{
    if (t == 0.0) throw Error(ErrorKind::ValidationError, "recovered_generator_gap at t = 0");
    auto quotient = [&pair](double h) -> CMatrix { return (pair.u(h) - pair.v(h)) / cplx(0.0, h); };
    return op_norm(CMatrix(2.0 * quotient(t / 2.0) - quotient(t)));
}

std::pair<double, double> subadditivity_audit(const HermitianPair& pair, double s, double t)
{
    const double ds = pair.distance(s);
    const double dt = pair.distance(t);
    const double excess = std::max(0.0, pair.distance(s + t) - ds - dt);
    const double reflection = std::abs(pair.distance(-t) - dt);
    return {excess, reflection};
}

bool second_order_forgiveness(const HermitianPair& pair, double c, double d, double a,
                              const std::vector<double>& t_grid)
{
    if (t_grid.empty()) throw Error(ErrorKind::EmptyGrid, "second_order_forgiveness needs a grid");
    if (!(a > 0.0)) throw Error(ErrorKind::ValidationError, "neighborhood radius must be positive");
    for (int i = 1; i <= hypothesis_samples; ++i) {
        const double t = a * i / hypothesis_samples;
        if (pair.distance(t) > c * t + d * t * t + inequality_slack) {
            std::ostringstream os;
            os << "||U(t)-V(t)|| exceeds " << c << "|t| + " << d << "t^2 at t = " << t;
            throw Error(ErrorKind::HypothesisUnmet, os.str());
        }
    }
    for (double t : t_grid) {
        if (pair.distance(t) > c * std::abs(t) + inequality_slack) return false;
    }
    return true;
}

} // namespace ccr
