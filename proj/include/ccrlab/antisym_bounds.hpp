#pragma once

#include <vector>

#include "ccrlab/linalg.hpp"

namespace ccr {

/// Real d x d matrix with transpose equal to its negative.
class RealAntisymMatrix {
public:
    static constexpr double validation_tol = 1e-12;

    /// Accepts raw if |raw(k,l) + raw(l,k)| < 1e-12 everywhere and stores the
    /// exactly antisymmetric part (raw - raw^T) / 2.
    static RealAntisymMatrix validate(const RMatrix& raw);
    /// Same, from nested rows (ragged input is NotSquare).
    static RealAntisymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static RealAntisymMatrix zero(int d);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const RMatrix& entries() const { return entries_; }
    double operator()(int k, int l) const { return entries_(k, l); }

    std::vector<std::vector<double>> rows() const;

    RealAntisymMatrix operator-(const RealAntisymMatrix& other) const;
    RealAntisymMatrix operator+(const RealAntisymMatrix& other) const;
    RealAntisymMatrix scaled(double s) const;

private:
    explicit RealAntisymMatrix(RMatrix entries) : entries_(std::move(entries)) {}

    RMatrix entries_;
};

/// Spectral norm, read off the eigenvalues of the Hermitian matrix i*theta.
double operator_norm(const RealAntisymMatrix& theta);

/// Frobenius norm.
double hs_norm(const RealAntisymMatrix& theta);

/// max |theta(k,l)|.
double max_entry(const RealAntisymMatrix& theta);

struct SpectrumPairing {
    /// Positive lambdas, one per conjugate pair {i lambda, -i lambda}, ascending.
    std::vector<double> pair_magnitudes;
    int zero_multiplicity = 0;
    /// Largest mismatch |lambda_+ - lambda_-| accepted while pairing.
    double pairing_residual = 0.0;

    /// The spectrum reassembled from the pairs, sorted by imaginary part.
    std::vector<cplx> eigenvalues() const;
};

/// Groups the purely imaginary spectrum into conjugate pairs plus zeros.
/// Throws PairingFailure if some nonzero eigenvalue has no partner within 1e-9.
SpectrumPairing spectrum_pairing(const RealAntisymMatrix& theta);

/// The 2n x 2n matrix [[0, -I], [I, 0]].
RealAntisymMatrix standard_J(int n);

struct BoundsReport {
    double gamma_norm = 0.0;
    double hs_norm = 0.0;
    double max_entry = 0.0;
    /// (5/sqrt 2) ||Gamma||^{1/2}
    double ours = 0.0;
    /// 9 (d-1) max_l |gamma(k,l)|^{1/2}, row by row.
    std::vector<double> gao_per_row;
    /// (5/sqrt 2) (d(d-1)/2)^{1/4} max^{1/2}: the bound after passing through the HS chain.
    double hs_chain = 0.0;
    /// 3 sqrt(d) max^{1/2}
    double three_sqrt_d = 0.0;
    /// Haagerup-Rordam constants for d = 2: the original 9 and the improved sqrt(45).
    double hr_constant = 9.0;
    double hr_improved_constant = 0.0;
};

BoundsReport bounds_report(const RealAntisymMatrix& theta, const RealAntisymMatrix& theta_prime);

} // namespace ccr
