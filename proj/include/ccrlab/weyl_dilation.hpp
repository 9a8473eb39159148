#pragma once

#include <vector>

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/fock_core.hpp"
#include "ccrlab/gram_vectors.hpp"

namespace ccr {

/// Corner comparisons require corner + headroom <= cutoff.
inline constexpr int headroom = 4;

/// Throws HeadroomViolation unless corner >= 0 and corner + 4 <= cutoff.
void require_headroom(int corner, int cutoff);

/// t -> W(t v_k) for the columns v_k of `vectors`, compressed to the
/// truncated Fock space over C^{vectors.rows()}. The columns realize `theta`.
struct WeylTuple {
    RealAntisymMatrix theta;
    CMatrix vectors;
    TruncationPtr trunc;

    int size() const { return static_cast<int>(vectors.cols()); }
    OperatorMatrix group(int k, double t) const;
};

WeylTuple build_tuple(const RealAntisymMatrix& theta, int cutoff);
WeylTuple build_tuple(const VectorSystem& system, int cutoff);
/// Tuple over the z-columns, commuting according to theta_prime.
WeylTuple build_tuple(const DilationVectorSystem& system, int cutoff);

/// Degree <= corner block of P W(a) P W(b) P.
CMatrix corner_product(const CVector& a, const CVector& b, const FockTruncation& trunc, int corner);

/// Corner norm of u_l(s) u_k(t) - e^{i theta(k,l) s t} u_k(t) u_l(s).
double commutation_residual(const WeylTuple& tuple, int k, int l, double s, double t, int corner);

enum class InnerProductConvention { LinearInFirst, LinearInSecond };

/// Corner norm of W(y) W(z) - e^{2i Im<y,z>} W(z) W(y). Passing
/// LinearInSecond evaluates the phase with the other convention, which
/// should fail; that is what makes this a convention self-test.
double phase_check(const CVector& y, const CVector& z, int cutoff, int corner,
                   InnerProductConvention convention = InnerProductConvention::LinearInFirst);

/// Positions of (n, 0, ..., 0) in `big` for every state n of `small`.
std::vector<std::size_t> embedding_indices(const FockTruncation& small, const FockTruncation& big);

/// Isometry Gamma(C^d) -> Gamma(C^{d'}) , n -> (n, 0, ..., 0). Throws CutoffMismatch.
CMatrix embed_isometry(const FockTruncation& small, const FockTruncation& big);

/// Corner norm of i^* W(t (x (+) y)) i - e^{-t^2 |y|^2 / 2} W(t x).
double compression_residual(const CVector& x, const CVector& y, double t, int cutoff, int corner);
double compression_residual(const DilationVectorSystem& system, int k, double t, int cutoff, int corner);

struct DilationWitness {
    double c = 0.0;

    double damping(double t) const;
};

/// c = ||theta - theta_prime|| / 4.
DilationWitness witness_constant(const RealAntisymMatrix& theta, const RealAntisymMatrix& theta_prime);

/// Blocks of an operator on Gamma(K) against the embedded Gamma(H):
/// corner = H->H, off_col = H->H^perp, off_row = H^perp->H, rest = H^perp->H^perp.
struct BlockDecomposition {
    CMatrix corner;
    CMatrix off_col;
    CMatrix off_row;
    CMatrix rest;
};

BlockDecomposition decompose(const OperatorMatrix& ambient, const FockTruncation& small);
CMatrix reassemble(const BlockDecomposition& blocks, const FockTruncation& small, const FockTruncation& big);

struct BlockEstimates {
    /// Windowed blocks: columns (or rows, for off_row) limited to degree <= corner.
    BlockDecomposition blocks;
    double y_norm = 0.0;
    double x_norm = 0.0;
    /// ||v' - v|| on the corner columns, v' the compression and v = W(t x_k).
    double damped_deviation = 0.0;
    /// max(||x||, ||y||) + ||v' - v||
    double e_candidate = 0.0;
    double off_block_bound = 0.0;  // |t| sqrt(2 delta)
    double e_bound = 0.0;          // |t| sqrt(2 delta) + t^2 delta
    double defect_residual = 0.0;  // ||y^* y + v'^* v' - 1|| on the window
    double defect_columnwise = 0.0;
    double slack = 0.0;
    bool y_ok = false;
    bool x_ok = false;
    bool e_ok = false;
    bool defect_ok = false;

    bool all_ok() const { return y_ok && x_ok && e_ok && defect_ok; }
};

/// Throws DeltaTooSmall when delta is below the witnessed constant.
BlockEstimates block_estimates(const DilationVectorSystem& system, int k, double t, int cutoff, int corner,
                               double delta, double slack = 1e-3);

} // namespace ccr
