#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/SparseCore>

#include "ccrlab/linalg.hpp"

namespace ccr {

using Occupation = std::vector<int>;

/// Default cap on the truncated Fock dimension; CCR_DIM_CAP overrides it.
inline constexpr std::size_t builtin_dimension_cap = 20000;
std::size_t default_dimension_cap();

/// binomial(modes + cutoff, modes), saturating at SIZE_MAX.
std::size_t fock_dimension(int modes, int cutoff);

/// Occupation basis of the symmetric Fock space over C^modes, truncated at
/// total degree <= cutoff. States are graded by total degree and ordered
/// lexicographically inside a degree, so the degree <= L states always form
/// a leading block.
class FockTruncation {
public:
    FockTruncation(int modes, int cutoff);

    int modes() const { return modes_; }
    int cutoff() const { return cutoff_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Occupation>& basis() const { return basis_; }
    const Occupation& state(std::size_t i) const { return basis_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::optional<std::size_t> index_of(const Occupation& n) const;
    /// Number of states of total degree <= level.
    std::size_t corner_size(int level) const;

private:
    int modes_;
    int cutoff_;
    std::vector<Occupation> basis_;
    std::vector<int> degrees_;
    std::map<Occupation, std::size_t> index_;
};

using TruncationPtr = std::shared_ptr<const FockTruncation>;

/// Throws DimensionCapExceeded if binomial(modes+cutoff, modes) > cap.
TruncationPtr make_truncation(int modes, int cutoff, std::size_t cap = default_dimension_cap());

struct OperatorMatrix {
    TruncationPtr trunc;
    CMatrix entries;
};

struct FockVector {
    TruncationPtr trunc;
    CVector coeffs;
};

cplx fock_inner(const FockVector& u, const FockVector& v);

/// Truncated exponential vector: coefficient prod_i x_i^{n_i} / sqrt(n_i!).
FockVector exp_vector(const CVector& x, const TruncationPtr& trunc);

using SparseOp = Eigen::SparseMatrix<cplx>;

/// a^dagger(z) = sum_i z_i a_i^dagger with transitions above the cutoff dropped.
SparseOp creation_sparse(const CVector& z, const FockTruncation& trunc);

OperatorMatrix creation(const CVector& z, const TruncationPtr& trunc);
/// a(z) = a^dagger(z)^*, antilinear in z.
OperatorMatrix annihilation(const CVector& z, const TruncationPtr& trunc);
/// A(z) = -i (a^dagger(z) - a(z)), so that W(z) = exp(i A(z)).
OperatorMatrix generator(const CVector& z, const TruncationPtr& trunc);

/// P_N W(z) P_N applied to the columns of `block`, i.e. the exact compression
/// of the Weyl operator evaluated as e^{-|z|^2/2} e^{a^dagger(z)} e^{-a(z)}.
/// Both exponentials are finite sums because the ladder matrices are nilpotent
/// on the truncation, and neither factor leaks through P_N.
CMatrix weyl_apply(const CVector& z, const FockTruncation& trunc, const CMatrix& block);

/// Exact compression P_N W(z) P_N.
OperatorMatrix weyl_compressed(const CVector& z, const TruncationPtr& trunc);

/// exp(i A(z)) with A truncated: unitary, but only agrees with the true Weyl
/// operator away from the cutoff.
OperatorMatrix weyl_exponentiated(const CVector& z, const TruncationPtr& trunc);

/// Leading block over states of total degree <= level; throws CutoffExceeded.
OperatorMatrix corner_restrict(const OperatorMatrix& m, int level);

double op_norm(const OperatorMatrix& m);

} // namespace ccr
