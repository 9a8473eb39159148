#include <doctest.h>

#include <cmath>

#include "ccrlab/errors.hpp"
#include "ccrlab/gram_vectors.hpp"
#include "ccrlab/random.hpp"

using namespace ccr;

namespace {

RealAntisymMatrix rot()
{
    RMatrix m(2, 2);
    m << 0, 1, -1, 0;
    return RealAntisymMatrix::validate(m);
}

// Oracle: 2 Im<x_l, x_k> summed by hand, independent of gram_of.
double direct_gram_residual(const CMatrix& x, const RealAntisymMatrix& target)
{
    double worst = 0.0;
    for (int k = 0; k < target.dim(); ++k) {
        for (int l = 0; l < target.dim(); ++l) {
            cplx ip = 0.0;
            for (Eigen::Index i = 0; i < x.rows(); ++i) ip += x(i, l) * std::conj(x(i, k));
            worst = std::max(worst, std::abs(2.0 * ip.imag() - target(k, l)));
        }
    }
    return worst;
}

double min_singular(const CMatrix& m)
{
    return Eigen::JacobiSVD<CMatrix>(m).singularValues().minCoeff();
}

} // namespace

TEST_CASE("inner product is linear in the first argument")
{
    CVector u(2), v(2);
    u << cplx(1, 2), cplx(0, 1);
    v << cplx(3, 0), cplx(1, 1);
    const cplx i(0, 1);
    CHECK(std::abs(inner(i * u, v) - i * inner(u, v)) < 1e-15);
    CHECK(std::abs(inner(u, i * v) + i * inner(u, v)) < 1e-15);
}

TEST_CASE("psd_factor")
{
    SUBCASE("identity gives orthonormal columns")
    {
        const CMatrix x = psd_factor(CMatrix::Identity(3, 3));
        CHECK((x.adjoint() * x - CMatrix::Identity(3, 3)).norm() < 1e-14);
    }
    SUBCASE("multiply back")
    {
        CMatrix g(2, 2);
        g << 1.0, cplx(0, -0.5), cplx(0, 0.5), 1.0;
        const CMatrix x = psd_factor(g);
        double worst = 0.0;
        for (int l = 0; l < 2; ++l)
            for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(inner(x.col(l), x.col(k)) - g(l, k)));
        CHECK(worst < 1e-12);
    }
    SUBCASE("negative eigenvalue")
    {
        CMatrix g = CMatrix::Identity(2, 2);
        g(1, 1) = -1e-3;
        CHECK_THROWS_WITH_AS(psd_factor(g), doctest::Contains("NotPSD"), Error);
    }
    SUBCASE("tiny negative eigenvalue is clamped")
    {
        CMatrix g = CMatrix::Identity(2, 2);
        g(1, 1) = -1e-11;
        const CMatrix x = psd_factor(g);
        CHECK(x.allFinite());
    }
    SUBCASE("not Hermitian")
    {
        CMatrix g = CMatrix::Identity(2, 2);
        g(0, 1) = 0.5;
        CHECK_THROWS_WITH_AS(psd_factor(g), doctest::Contains("NotHermitian"), Error);
    }
}

TEST_CASE("verify_gram examples")
{
    const CMatrix id = CMatrix::Identity(2, 2);
    CHECK(verify_gram(id, RealAntisymMatrix::zero(2)) == 0.0);
    CHECK(verify_gram(id, rot()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(verify_gram(id, RealAntisymMatrix::zero(3)), Error);
}

TEST_CASE("construct_theta_vectors")
{
    SUBCASE("commuting case")
    {
        const VectorSystem sys = construct_theta_vectors(RealAntisymMatrix::zero(2));
        CHECK(sys.shift_c == 1.0);
        CHECK((sys.x.adjoint() * sys.x - CMatrix::Identity(2, 2)).norm() < 1e-14);
        CHECK(gram_of(sys.x).imag().cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("rotation generator")
    {
        const VectorSystem sys = construct_theta_vectors(rot());
        CHECK(sys.shift_c == doctest::Approx(1.5));
        CHECK(direct_gram_residual(sys.x, rot()) < 1e-12);
        CHECK(std::abs(2.0 * inner(sys.x.col(1), sys.x.col(0)).imag() - 1.0) < 1e-12);
    }
    SUBCASE("random 6x6")
    {
        Rng rng = trial_rng(42, 200, 0);
        const auto theta = random_antisym(6, rng);
        const VectorSystem sys = construct_theta_vectors(theta);
        CHECK(direct_gram_residual(sys.x, theta) < 1e-10);
        CHECK(min_singular(sys.x) > 0.5);
    }
}

TEST_CASE("round trip over random thetas")
{
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = trial_rng(42, 201, static_cast<std::uint64_t>(trial));
        const int d = 1 + trial % 8;
        const auto theta = random_antisym(d, rng);
        const VectorSystem sys = construct_theta_vectors(theta);
        CHECK(verify_gram(sys.x, theta) < 1e-10);
        CHECK(direct_gram_residual(sys.x, theta) < 1e-10);
    }
}

TEST_CASE("extend_vectors")
{
    SUBCASE("identical matrices give y = 0")
    {
        const auto base = construct_theta_vectors(rot());
        const auto ext = extend_vectors(base, rot());
        CHECK(ext.y.cwiseAbs().maxCoeff() == 0.0);
        CHECK(ext.z.topRows(2) == base.x);
    }
    SUBCASE("rotation against zero")
    {
        const auto ext = extend_vectors(construct_theta_vectors(rot()), RealAntisymMatrix::zero(2));
        CHECK(std::abs(ext.y.col(0).squaredNorm() - 0.5) < 1e-12);
        CHECK(std::abs(ext.y.col(1).squaredNorm() - 0.5) < 1e-12);
        CHECK(direct_gram_residual(ext.z, RealAntisymMatrix::zero(2)) < 1e-12);
    }
    SUBCASE("dimension mismatch")
    {
        CHECK_THROWS_WITH_AS(extend_vectors(construct_theta_vectors(rot()), RealAntisymMatrix::zero(3)),
                             doctest::Contains("DimensionMismatch"), Error);
    }
}

TEST_CASE("extension consistency on random pairs")
{
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = trial_rng(42, 202, static_cast<std::uint64_t>(trial));
        const int d = 1 + trial % 8;
        const auto theta = random_antisym(d, rng);
        const auto theta_prime = random_antisym(d, rng);
        const auto ext = extend_vectors(construct_theta_vectors(theta), theta_prime);
        const double half_gamma = operator_norm(theta_prime - theta) / 2.0;

        CHECK(direct_gram_residual(ext.z, theta_prime) < 1e-10);
        CHECK(direct_gram_residual(ext.base.x, theta) < 1e-10);
        for (int k = 0; k < d; ++k) CHECK(std::abs(ext.y.col(k).squaredNorm() - half_gamma) < 1e-10);
        // p_H z_k = x_k, bit for bit.
        CHECK(ext.z.topRows(d) == ext.base.x);
        CHECK(min_singular(ext.z) >= min_singular(ext.base.x) - 1e-12);
        CHECK(min_singular(ext.z) > 1e-10);
    }
}
