#include "ccrlab/antisym_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

constexpr double pairing_tol = 1e-9;

Eigen::VectorXd hermitian_spectrum(const RealAntisymMatrix& theta)
{
    if (theta.dim() == 0) return {};
    const CMatrix h = cplx(0.0, 1.0) * theta.entries().cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigensolveFailure, "eigensolve of i*theta failed");
    }
    return es.eigenvalues();
}

} // namespace

RealAntisymMatrix RealAntisymMatrix::validate(const RMatrix& raw)
{
    if (raw.rows() != raw.cols() || raw.rows() == 0) {
        std::ostringstream os;
        os << "expected a nonempty square matrix, got " << raw.rows() << "x" << raw.cols();
        throw Error(ErrorKind::NotSquare, os.str());
    }
    for (Eigen::Index k = 0; k < raw.rows(); ++k) {
        for (Eigen::Index l = 0; l < raw.cols(); ++l) {
            if (!std::isfinite(raw(k, l))) {
                throw Error(ErrorKind::NotAntisymmetric, "non-finite entry");
            }
            const double drift = std::abs(raw(k, l) + raw(l, k));
            if (drift >= validation_tol) {
                std::ostringstream os;
                os << "entry (" << k << "," << l << ") + (" << l << "," << k << ") = " << drift;
                throw Error(ErrorKind::NotAntisymmetric, os.str());
            }
        }
    }
    return RealAntisymMatrix(0.5 * (raw - raw.transpose()));
}

RealAntisymMatrix RealAntisymMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    const auto d = rows.size();
    RMatrix raw(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (rows[k].size() != d) {
            std::ostringstream os;
            os << "row " << k << " has " << rows[k].size() << " entries, expected " << d;
            throw Error(ErrorKind::NotSquare, os.str());
        }
        for (std::size_t l = 0; l < d; ++l) raw(k, l) = rows[k][l];
    }
    return validate(raw);
}

RealAntisymMatrix RealAntisymMatrix::zero(int d)
{
    return RealAntisymMatrix(RMatrix::Zero(d, d));
}

std::vector<std::vector<double>> RealAntisymMatrix::rows() const
{
    std::vector<std::vector<double>> out(dim(), std::vector<double>(dim()));
    for (int k = 0; k < dim(); ++k)
        for (int l = 0; l < dim(); ++l) out[k][l] = entries_(k, l);
    return out;
}

RealAntisymMatrix RealAntisymMatrix::operator-(const RealAntisymMatrix& other) const
{
    if (dim() != other.dim()) throw Error(ErrorKind::DimensionMismatch, "antisymmetric difference");
    return RealAntisymMatrix(entries_ - other.entries_);
}

RealAntisymMatrix RealAntisymMatrix::operator+(const RealAntisymMatrix& other) const
{
    if (dim() != other.dim()) throw Error(ErrorKind::DimensionMismatch, "antisymmetric sum");
    return RealAntisymMatrix(entries_ + other.entries_);
}

RealAntisymMatrix RealAntisymMatrix::scaled(double s) const
{
    return RealAntisymMatrix(s * entries_);
}

double operator_norm(const RealAntisymMatrix& theta)
{
    // The real SVD returns exactly 1 for J, the complex eigensolver does not.
    return op_norm(theta.entries());
}

double hs_norm(const RealAntisymMatrix& theta)
{
    return theta.entries().norm();
}

double max_entry(const RealAntisymMatrix& theta)
{
    return theta.entries().cwiseAbs().maxCoeff();
}

std::vector<cplx> SpectrumPairing::eigenvalues() const
{
    std::vector<cplx> out;
    for (double lambda : pair_magnitudes) {
        out.emplace_back(0.0, lambda);
        out.emplace_back(0.0, -lambda);
    }
    out.insert(out.end(), static_cast<std::size_t>(zero_multiplicity), cplx(0.0, 0.0));
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
    return out;
}

SpectrumPairing spectrum_pairing(const RealAntisymMatrix& theta)
{
    // Eigenvalues of theta are -i*mu for the real eigenvalues mu of i*theta.
    const Eigen::VectorXd mu = hermitian_spectrum(theta);
    std::vector<double> positive, negative;
    SpectrumPairing out;
    for (double m : mu) {
        if (std::abs(m) <= pairing_tol) {
            ++out.zero_multiplicity;
        } else if (m > 0) {
            positive.push_back(m);
        } else {
            negative.push_back(-m);
        }
    }
    std::sort(positive.begin(), positive.end());
    std::sort(negative.begin(), negative.end());
    if (positive.size() != negative.size()) {
        throw Error(ErrorKind::PairingFailure, "unequal numbers of +i and -i eigenvalues");
    }
    for (std::size_t i = 0; i < positive.size(); ++i) {
        const double gap = std::abs(positive[i] - negative[i]);
        if (gap > pairing_tol) {
            std::ostringstream os;
            os << "eigenvalue " << positive[i] << " has no conjugate partner (gap " << gap << ")";
            throw Error(ErrorKind::PairingFailure, os.str());
        }
        out.pairing_residual = std::max(out.pairing_residual, gap);
        out.pair_magnitudes.push_back(0.5 * (positive[i] + negative[i]));
    }
    return out;
}

RealAntisymMatrix standard_J(int n)
{
    if (n < 1) throw Error(ErrorKind::ValidationError, "standard_J needs n >= 1");
    RMatrix j = RMatrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -RMatrix::Identity(n, n);
    j.bottomLeftCorner(n, n) = RMatrix::Identity(n, n);
    return RealAntisymMatrix::validate(j);
}

BoundsReport bounds_report(const RealAntisymMatrix& theta, const RealAntisymMatrix& theta_prime)
{
    if (theta.dim() != theta_prime.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "bounds_report needs matrices of equal size");
    }
    const RealAntisymMatrix gamma = theta - theta_prime;
    const int d = gamma.dim();
    const double ours_constant = 5.0 / std::sqrt(2.0);

    BoundsReport r;
    r.gamma_norm = operator_norm(gamma);
    r.hs_norm = hs_norm(gamma);
    r.max_entry = max_entry(gamma);
    r.ours = ours_constant * std::sqrt(r.gamma_norm);
    r.gao_per_row.resize(d);
    for (int k = 0; k < d; ++k) {
        const double row_max = gamma.entries().row(k).cwiseAbs().maxCoeff();
        r.gao_per_row[k] = 9.0 * (d - 1) * std::sqrt(row_max);
    }
    r.hs_chain = ours_constant * std::pow(d * (d - 1) / 2.0, 0.25) * std::sqrt(r.max_entry);
    r.three_sqrt_d = 3.0 * std::sqrt(static_cast<double>(d)) * std::sqrt(r.max_entry);
    r.hr_constant = 9.0;
    r.hr_improved_constant = std::sqrt(45.0);
    return r;
}

} // namespace ccr
