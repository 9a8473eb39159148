#include "ccrlab/fock_core.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

void enumerate_degree(int modes, int remaining, Occupation& prefix, std::vector<Occupation>& out)
{
    const auto pos = prefix.size();
    if (static_cast<int>(pos) == modes - 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int n = 0; n <= remaining; ++n) {
        prefix.push_back(n);
        enumerate_degree(modes, remaining - n, prefix, out);
        prefix.pop_back();
    }
}

// Horner evaluation of exp(op) * block for nilpotent op of index <= order + 1.
CMatrix nilpotent_exp_apply(const SparseOp& op, int order, const CMatrix& block)
{
    CMatrix acc = block;
    for (int k = order; k >= 1; --k) {
        CMatrix next = block;
        next.noalias() += (op * acc) / static_cast<double>(k);
        acc.swap(next);
    }
    return acc;
}

} // namespace

std::size_t default_dimension_cap()
{
    const char* env = std::getenv("CCR_DIM_CAP");
    if (env == nullptr || *env == '\0') return builtin_dimension_cap;
    try {
        std::size_t used = 0;
        const unsigned long long cap = std::stoull(env, &used);
        if (used != std::string(env).size() || cap == 0) throw std::invalid_argument(env);
        return static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ValidationError, std::string("CCR_DIM_CAP is not a positive integer: ") + env);
    }
}

std::size_t fock_dimension(int modes, int cutoff)
{
    // C(cutoff + i, i) is an integer at every step of the product.
    constexpr auto saturated = std::numeric_limits<std::size_t>::max();
    unsigned __int128 c = 1;
    for (int i = 1; i <= modes; ++i) {
        c = c * static_cast<unsigned>(cutoff + i) / static_cast<unsigned>(i);
        if (c > saturated) return saturated;
    }
    return static_cast<std::size_t>(c);
}

FockTruncation::FockTruncation(int modes, int cutoff) : modes_(modes), cutoff_(cutoff)
{
    if (modes < 1 || cutoff < 0) {
        throw Error(ErrorKind::ValidationError, "need modes >= 1 and cutoff >= 0");
    }
    basis_.reserve(fock_dimension(modes, cutoff));
    Occupation prefix;
    for (int deg = 0; deg <= cutoff; ++deg) {
        const auto first = basis_.size();
        enumerate_degree(modes, deg, prefix, basis_);
        degrees_.insert(degrees_.end(), basis_.size() - first, deg);
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> FockTruncation::index_of(const Occupation& n) const
{
    const auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FockTruncation::corner_size(int level) const
{
    if (level < 0) return 0;
    if (level >= cutoff_) return size();
    return fock_dimension(modes_, level);
}

TruncationPtr make_truncation(int modes, int cutoff, std::size_t cap)
{
    if (modes < 1 || cutoff < 0) {
        throw Error(ErrorKind::ValidationError, "need modes >= 1 and cutoff >= 0");
    }
    const std::size_t dim = fock_dimension(modes, cutoff);
    if (dim > cap) {
        std::ostringstream os;
        os << "binomial(" << modes + cutoff << ", " << modes << ") = " << dim << " exceeds cap " << cap;
        throw Error(ErrorKind::DimensionCapExceeded, os.str());
    }
    return std::make_shared<const FockTruncation>(modes, cutoff);
}

cplx fock_inner(const FockVector& u, const FockVector& v)
{
    if (u.coeffs.size() != v.coeffs.size()) {
        throw Error(ErrorKind::DimensionMismatch, "Fock vectors from different truncations");
    }
    return inner(u.coeffs, v.coeffs);
}

FockVector exp_vector(const CVector& x, const TruncationPtr& trunc)
{
    if (x.size() != trunc->modes()) throw Error(ErrorKind::DimensionMismatch, "exp_vector mode count");
    CVector coeffs(trunc->size());
    for (std::size_t j = 0; j < trunc->size(); ++j) {
        cplx c(1.0, 0.0);
        const Occupation& n = trunc->state(j);
        for (int i = 0; i < trunc->modes(); ++i) {
            for (int p = 1; p <= n[i]; ++p) c *= x(i) / std::sqrt(static_cast<double>(p));
        }
        coeffs(static_cast<Eigen::Index>(j)) = c;
    }
    return FockVector{trunc, std::move(coeffs)};
}

SparseOp creation_sparse(const CVector& z, const FockTruncation& trunc)
{
    if (z.size() != trunc.modes()) throw Error(ErrorKind::DimensionMismatch, "ladder mode count");
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(trunc.size() * static_cast<std::size_t>(trunc.modes()));
    Occupation raised;
    for (std::size_t j = 0; j < trunc.size(); ++j) {
        if (trunc.degree(j) >= trunc.cutoff()) continue;
        for (int i = 0; i < trunc.modes(); ++i) {
            if (z(i) == cplx(0.0, 0.0)) continue;
            raised = trunc.state(j);
            ++raised[i];
            const std::size_t target = *trunc.index_of(raised);
            triplets.emplace_back(static_cast<int>(target), static_cast<int>(j),
                                  z(i) * std::sqrt(static_cast<double>(raised[i])));
        }
    }
    const auto n = static_cast<Eigen::Index>(trunc.size());
    SparseOp op(n, n);
    op.setFromTriplets(triplets.begin(), triplets.end());
    op.makeCompressed();
    return op;
}

OperatorMatrix creation(const CVector& z, const TruncationPtr& trunc)
{
    return OperatorMatrix{trunc, CMatrix(creation_sparse(z, *trunc))};
}

OperatorMatrix annihilation(const CVector& z, const TruncationPtr& trunc)
{
    return OperatorMatrix{trunc, CMatrix(creation_sparse(z, *trunc).adjoint())};
}

OperatorMatrix generator(const CVector& z, const TruncationPtr& trunc)
{
    const SparseOp up = creation_sparse(z, *trunc);
    const SparseOp down = up.adjoint();
    CMatrix a = cplx(0.0, -1.0) * CMatrix(up - down);
    return OperatorMatrix{trunc, std::move(a)};
}

CMatrix weyl_apply(const CVector& z, const FockTruncation& trunc, const CMatrix& block)
{
    if (block.rows() != static_cast<Eigen::Index>(trunc.size())) {
        throw Error(ErrorKind::DimensionMismatch, "block rows differ from truncation size");
    }
    const SparseOp up = creation_sparse(z, trunc);
    const SparseOp down = SparseOp(-1.0 * up.adjoint());
    CMatrix out = nilpotent_exp_apply(down, trunc.cutoff(), block);
    out = nilpotent_exp_apply(up, trunc.cutoff(), out);
    return std::exp(-0.5 * z.squaredNorm()) * out;
}

OperatorMatrix weyl_compressed(const CVector& z, const TruncationPtr& trunc)
{
    const auto n = static_cast<Eigen::Index>(trunc->size());
    return OperatorMatrix{trunc, weyl_apply(z, *trunc, CMatrix::Identity(n, n))};
}

OperatorMatrix weyl_exponentiated(const CVector& z, const TruncationPtr& trunc)
{
    const OperatorMatrix a = generator(z, trunc);
    return OperatorMatrix{trunc, hermitian_exp(a.entries, 1.0)};
}

OperatorMatrix corner_restrict(const OperatorMatrix& m, int level)
{
    if (level < 0 || level > m.trunc->cutoff()) {
        std::ostringstream os;
        os << "corner level " << level << " outside [0, " << m.trunc->cutoff() << "]";
        throw Error(ErrorKind::CutoffExceeded, os.str());
    }
    if (level == m.trunc->cutoff()) return m;
    auto small = make_truncation(m.trunc->modes(), level, std::numeric_limits<std::size_t>::max());
    const auto n = static_cast<Eigen::Index>(small->size());
    return OperatorMatrix{std::move(small), m.entries.topLeftCorner(n, n)};
}

double op_norm(const OperatorMatrix& m)
{
    return op_norm(m.entries);
}

} // namespace ccr
