#pragma once

#include <utility>
#include <vector>

#include "ccrlab/linalg.hpp"

namespace ccr {

/// Generators of U(t) = e^{itA} and V(t) = e^{itB}.
class HermitianPair {
public:
    static constexpr double hermitian_tol = 1e-12;

    /// Throws NotHermitian / DimensionMismatch.
    HermitianPair(CMatrix a, CMatrix b);

    int dim() const { return static_cast<int>(a_.rows()); }
    const CMatrix& a() const { return a_; }
    const CMatrix& b() const { return b_; }

    CMatrix u(double t) const;
    CMatrix v(double t) const;
    /// ||U(t) - V(t)||
    double distance(double t) const;
    /// ||A - B||
    double generator_gap() const;

private:
    CMatrix a_;
    CMatrix b_;
    // Eigensystems, computed once so every group evaluation is a rescaling.
    Eigen::VectorXd a_spectrum_, b_spectrum_;
    CMatrix a_basis_, b_basis_;
};

/// exp(i t a) for Hermitian a.
CMatrix group_at(const CMatrix& a, double t);

/// max over the grid of ||U(t) - V(t)|| / |t|; zero entries are skipped.
double lipschitz_audit(const HermitianPair& pair, const std::vector<double>& t_grid);

/// ||(U(t) - V(t)) / t - i (A - B)||, which is O(|t|).
double difference_quotient(const HermitianPair& pair, double t);

/// ||A - B|| recovered from groups alone: Richardson extrapolation of the
/// difference quotient, 2 D(t/2) - D(t) with D(t) = (U(t) - V(t)) / (i t).
double recovered_generator_gap(const HermitianPair& pair, double t);

/// (max(0, ||U(s+t)-V(s+t)|| - ||U(s)-V(s)|| - ||U(t)-V(t)||),
///  | ||U(-t)-V(-t)|| - ||U(t)-V(t)|| |)
std::pair<double, double> subadditivity_audit(const HermitianPair& pair, double s, double t);

/// Checks ||U(t)-V(t)|| <= c|t| + d t^2 on (0, a] (HypothesisUnmet otherwise),
/// then reports whether ||U(t)-V(t)|| <= c|t| + 1e-9 on every grid point.
bool second_order_forgiveness(const HermitianPair& pair, double c, double d, double a,
                              const std::vector<double>& t_grid);

} // namespace ccr
