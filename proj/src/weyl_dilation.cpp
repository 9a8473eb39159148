#include "ccrlab/weyl_dilation.hpp"

#include <cmath>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

CMatrix leading_columns(std::size_t rows, std::size_t cols)
{
    return CMatrix::Identity(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

CMatrix selected_columns(std::size_t rows, const std::vector<std::size_t>& picks)
{
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(picks.size()));
    for (std::size_t j = 0; j < picks.size(); ++j) {
        out(static_cast<Eigen::Index>(picks[j]), static_cast<Eigen::Index>(j)) = 1.0;
    }
    return out;
}

CMatrix take_rows(const CMatrix& m, const std::vector<std::size_t>& rows)
{
    CMatrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
    return out;
}

CMatrix take_block(const CMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
    return out;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& picked, std::size_t total)
{
    std::vector<bool> hit(total, false);
    for (std::size_t i : picked) hit[i] = true;
    std::vector<std::size_t> out;
    out.reserve(total - picked.size());
    for (std::size_t i = 0; i < total; ++i)
        if (!hit[i]) out.push_back(i);
    return out;
}

} // namespace

void require_headroom(int corner, int cutoff)
{
    if (corner < 0 || corner + headroom > cutoff) {
        std::ostringstream os;
        os << "corner " << corner << " + " << headroom << " exceeds cutoff " << cutoff;
        throw Error(ErrorKind::HeadroomViolation, os.str());
    }
}

OperatorMatrix WeylTuple::group(int k, double t) const
{
    return weyl_compressed(t * vectors.col(k), trunc);
}

WeylTuple build_tuple(const RealAntisymMatrix& theta, int cutoff)
{
    return build_tuple(construct_theta_vectors(theta), cutoff);
}

WeylTuple build_tuple(const VectorSystem& system, int cutoff)
{
    return WeylTuple{system.theta, system.x, make_truncation(system.dim(), cutoff)};
}

WeylTuple build_tuple(const DilationVectorSystem& system, int cutoff)
{
    return WeylTuple{system.theta_prime, system.z, make_truncation(2 * system.dim(), cutoff)};
}

CMatrix corner_product(const CVector& a, const CVector& b, const FockTruncation& trunc, int corner)
{
    const std::size_t n = trunc.corner_size(corner);
    const CMatrix window = leading_columns(trunc.size(), n);
    // Rows of P W(a) P are the adjoint of the columns of P W(-a) P.
    const CMatrix left_rows = weyl_apply(-a, trunc, window).adjoint();
    const CMatrix right_cols = weyl_apply(b, trunc, window);
    return left_rows * right_cols;
}

double commutation_residual(const WeylTuple& tuple, int k, int l, double s, double t, int corner)
{
    require_headroom(corner, tuple.trunc->cutoff());
    if (k < 0 || l < 0 || k >= tuple.size() || l >= tuple.size()) {
        throw Error(ErrorKind::DimensionMismatch, "tuple index out of range");
    }
    const CVector xl = s * tuple.vectors.col(l);
    const CVector xk = t * tuple.vectors.col(k);
    const cplx phase = std::polar(1.0, tuple.theta(k, l) * s * t);
    const CMatrix lhs = corner_product(xl, xk, *tuple.trunc, corner);
    const CMatrix rhs = corner_product(xk, xl, *tuple.trunc, corner);
    return op_norm(CMatrix(lhs - phase * rhs));
}

double phase_check(const CVector& y, const CVector& z, int cutoff, int corner, InnerProductConvention convention)
{
    if (y.size() != z.size()) throw Error(ErrorKind::DimensionMismatch, "phase_check vector sizes");
    require_headroom(corner, cutoff);
    const auto trunc = make_truncation(static_cast<int>(y.size()), cutoff);
    const cplx ip = convention == InnerProductConvention::LinearInFirst ? inner(y, z) : inner(z, y);
    const cplx phase = std::polar(1.0, 2.0 * ip.imag());
    const CMatrix lhs = corner_product(y, z, *trunc, corner);
    const CMatrix rhs = corner_product(z, y, *trunc, corner);
    return op_norm(CMatrix(lhs - phase * rhs));
}

std::vector<std::size_t> embedding_indices(const FockTruncation& small, const FockTruncation& big)
{
    if (small.cutoff() != big.cutoff()) {
        throw Error(ErrorKind::CutoffMismatch, "embedding needs equal cutoffs");
    }
    if (small.modes() > big.modes()) {
        throw Error(ErrorKind::DimensionMismatch, "embedding into fewer modes");
    }
    std::vector<std::size_t> out(small.size());
    Occupation padded(big.modes(), 0);
    for (std::size_t j = 0; j < small.size(); ++j) {
        std::copy(small.state(j).begin(), small.state(j).end(), padded.begin());
        out[j] = *big.index_of(padded);
    }
    return out;
}

CMatrix embed_isometry(const FockTruncation& small, const FockTruncation& big)
{
    return selected_columns(big.size(), embedding_indices(small, big));
}

double compression_residual(const CVector& x, const CVector& y, double t, int cutoff, int corner)
{
    require_headroom(corner, cutoff);
    const auto small = make_truncation(static_cast<int>(x.size()), cutoff);
    const auto big = make_truncation(static_cast<int>(x.size() + y.size()), cutoff);
    const auto embed = embedding_indices(*small, *big);
    const std::size_t n = small->corner_size(corner);
    const std::vector<std::size_t> window(embed.begin(), embed.begin() + static_cast<std::ptrdiff_t>(n));

    CVector z(x.size() + y.size());
    z << x, y;
    const CMatrix big_cols = weyl_apply(t * z, *big, selected_columns(big->size(), window));
    const CMatrix compressed = take_rows(big_cols, window);
    const CMatrix damped = std::exp(-0.5 * t * t * y.squaredNorm()) *
                           weyl_apply(t * x, *small, leading_columns(small->size(), n)).topRows(static_cast<Eigen::Index>(n));
    return op_norm(CMatrix(compressed - damped));
}

double compression_residual(const DilationVectorSystem& system, int k, double t, int cutoff, int corner)
{
    if (k < 0 || k >= system.dim()) throw Error(ErrorKind::DimensionMismatch, "vector index out of range");
    return compression_residual(system.base.x.col(k), system.y.col(k), t, cutoff, corner);
}

double DilationWitness::damping(double t) const
{
    return std::exp(-c * t * t);
}

DilationWitness witness_constant(const RealAntisymMatrix& theta, const RealAntisymMatrix& theta_prime)
{
    if (theta.dim() != theta_prime.dim()) throw Error(ErrorKind::DimensionMismatch, "witness_constant");
    return DilationWitness{operator_norm(theta - theta_prime) / 4.0};
}

BlockDecomposition decompose(const OperatorMatrix& ambient, const FockTruncation& small)
{
    const auto embed = embedding_indices(small, *ambient.trunc);
    const auto rest = complement(embed, ambient.trunc->size());
    return BlockDecomposition{take_block(ambient.entries, embed, embed), take_block(ambient.entries, rest, embed),
                              take_block(ambient.entries, embed, rest), take_block(ambient.entries, rest, rest)};
}

CMatrix reassemble(const BlockDecomposition& blocks, const FockTruncation& small, const FockTruncation& big)
{
    const auto embed = embedding_indices(small, big);
    const auto rest = complement(embed, big.size());
    const auto n = static_cast<Eigen::Index>(big.size());
    CMatrix out(n, n);
    auto scatter = [&out](const CMatrix& block, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                out(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j])) =
                    block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    scatter(blocks.corner, embed, embed);
    scatter(blocks.off_col, rest, embed);
    scatter(blocks.off_row, embed, rest);
    scatter(blocks.rest, rest, rest);
    return out;
}

BlockEstimates block_estimates(const DilationVectorSystem& system, int k, double t, int cutoff, int corner,
                               double delta, double slack)
{
    require_headroom(corner, cutoff);
    if (k < 0 || k >= system.dim()) throw Error(ErrorKind::DimensionMismatch, "vector index out of range");
    const double c = system.gamma_norm() / 4.0;
    if (delta < c * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "delta " << delta << " below witnessed constant " << c;
        throw Error(ErrorKind::DeltaTooSmall, os.str());
    }

    const int d = system.dim();
    const auto small = make_truncation(d, cutoff);
    const auto big = make_truncation(2 * d, cutoff);
    const auto embed = embedding_indices(*small, *big);
    const auto outside = complement(embed, big->size());
    const std::size_t n = small->corner_size(corner);
    const std::vector<std::size_t> window(embed.begin(), embed.begin() + static_cast<std::ptrdiff_t>(n));
    const CVector z = t * system.z.col(k);
    const CVector x = t * system.base.x.col(k);

    // Columns W i_L, and rows i_L^* W read off the adjoint of W(-z) i_L.
    const CMatrix cols = weyl_apply(z, *big, selected_columns(big->size(), window));
    const CMatrix rows_adj = weyl_apply(-z, *big, selected_columns(big->size(), window));

    BlockEstimates out;
    out.blocks.corner = take_rows(cols, embed);
    out.blocks.off_col = take_rows(cols, outside);
    out.blocks.off_row = take_rows(rows_adj, outside).adjoint();

    const CMatrix v = weyl_apply(x, *small, leading_columns(small->size(), n));
    const auto ni = static_cast<Eigen::Index>(n);

    out.y_norm = op_norm(out.blocks.off_col);
    out.x_norm = op_norm(out.blocks.off_row);
    out.damped_deviation = op_norm(CMatrix(out.blocks.corner - v));
    out.e_candidate = std::max(out.x_norm, out.y_norm) + out.damped_deviation;
    out.off_block_bound = std::abs(t) * std::sqrt(2.0 * delta);
    out.e_bound = out.off_block_bound + t * t * delta;

    const CMatrix defect = out.blocks.off_col.adjoint() * out.blocks.off_col +
                           out.blocks.corner.adjoint() * out.blocks.corner - CMatrix::Identity(ni, ni);
    out.defect_residual = op_norm(defect);
    for (Eigen::Index j = 0; j < ni; ++j) {
        const double lhs = out.blocks.off_col.col(j).squaredNorm();
        const double rhs = 1.0 - out.blocks.corner.col(j).squaredNorm();
        out.defect_columnwise = std::max(out.defect_columnwise, std::abs(lhs - rhs));
    }

    out.slack = slack;
    out.y_ok = out.y_norm <= out.off_block_bound + slack;
    out.x_ok = out.x_norm <= out.off_block_bound + slack;
    out.e_ok = out.e_candidate <= out.e_bound + slack;
    out.defect_ok = out.defect_residual <= slack && out.defect_columnwise <= slack;
    return out;
}

} // namespace ccr
