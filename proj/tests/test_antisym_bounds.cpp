#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/errors.hpp"
#include "ccrlab/random.hpp"

using namespace ccr;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected ccr::Error");
    return ErrorKind::IoError;
}

RMatrix rot()
{
    RMatrix m(2, 2);
    m << 0, 1, -1, 0;
    return m;
}

// Oracle: square root of the top eigenvalue of the Gram matrix m^T m.
double svd_norm(const RMatrix& m)
{
    const RMatrix gram = m.transpose() * m;
    return std::sqrt(Eigen::SelfAdjointEigenSolver<RMatrix>(gram).eigenvalues().maxCoeff());
}

} // namespace

TEST_CASE("validate accepts antisymmetric input and rejects the rest")
{
    const auto theta = RealAntisymMatrix::validate(rot());
    CHECK(theta.dim() == 2);
    CHECK(theta(0, 1) == 1.0);

    RMatrix sym(2, 2);
    sym << 0, 1, 1, 0;
    CHECK(kind_of([&] { RealAntisymMatrix::validate(sym); }) == ErrorKind::NotAntisymmetric);
    CHECK(kind_of([&] { RealAntisymMatrix::validate(RMatrix::Zero(2, 3)); }) == ErrorKind::NotSquare);
    CHECK(kind_of([&] { RealAntisymMatrix::from_rows({{0, 1}, {-1}}); }) == ErrorKind::NotSquare);
}

TEST_CASE("validate symmetrizes sub-tolerance drift")
{
    RMatrix m = rot();
    m(1, 0) = -1.0 + 4e-13;
    const auto theta = RealAntisymMatrix::validate(m);
    CHECK(theta(0, 1) == -theta(1, 0));
    CHECK(theta(0, 0) == 0.0);

    m(1, 0) = -1.0 + 2e-12;
    CHECK(kind_of([&] { RealAntisymMatrix::validate(m); }) == ErrorKind::NotAntisymmetric);
}

TEST_CASE("operator_norm")
{
    CHECK(operator_norm(RealAntisymMatrix::validate(rot())) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(operator_norm(RealAntisymMatrix::zero(4)) == 0.0);

    Rng rng = trial_rng(42, 100, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto theta = random_antisym(6, rng);
        CHECK(std::abs(operator_norm(theta) - svd_norm(theta.entries())) < 1e-10);
    }
}

TEST_CASE("spectrum_pairing on small cases")
{
    const auto p = spectrum_pairing(RealAntisymMatrix::validate(rot()));
    REQUIRE(p.pair_magnitudes.size() == 1);
    CHECK(p.pair_magnitudes[0] == doctest::Approx(1.0));
    CHECK(p.zero_multiplicity == 0);

    RMatrix bd = RMatrix::Zero(3, 3);
    bd.topLeftCorner(2, 2) = standard_J(1).entries();
    const auto q = spectrum_pairing(RealAntisymMatrix::validate(bd));
    REQUIRE(q.pair_magnitudes.size() == 1);
    CHECK(q.pair_magnitudes[0] == doctest::Approx(1.0));
    CHECK(q.zero_multiplicity == 1);
}

TEST_CASE("spectrum_pairing reassembles the spectrum of a general eigensolve")
{
    Rng rng = trial_rng(42, 101, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 8;
        const auto theta = random_antisym(d, rng);
        const auto pairing = spectrum_pairing(theta);
        if (d % 2 == 1) CHECK(pairing.zero_multiplicity >= 1);

        // Oracle: the nonsymmetric eigensolver on theta itself.
        Eigen::EigenSolver<RMatrix> es(theta.entries(), false);
        std::vector<cplx> direct(es.eigenvalues().begin(), es.eigenvalues().end());
        std::sort(direct.begin(), direct.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
        const auto rebuilt = pairing.eigenvalues();
        REQUIRE(rebuilt.size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
            CHECK(std::abs(direct[i].real()) < 1e-9);
            CHECK(std::abs(rebuilt[i] - direct[i]) < 1e-9);
        }
    }
}

TEST_CASE("standard_J block pattern")
{
    const auto j1 = standard_J(1);
    CHECK(j1(0, 0) == 0.0);
    CHECK(j1(0, 1) == -1.0);
    CHECK(j1(1, 0) == 1.0);
    CHECK(j1(1, 1) == 0.0);

    const auto j2 = standard_J(2);
    RMatrix expect = RMatrix::Zero(4, 4);
    expect(0, 2) = expect(1, 3) = -1.0;
    expect(2, 0) = expect(3, 1) = 1.0;
    CHECK(j2.entries() == expect);

    CHECK(operator_norm(standard_J(3)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("bounds_report values")
{
    const auto theta = RealAntisymMatrix::validate(rot());
    const auto b = bounds_report(theta, RealAntisymMatrix::zero(2));
    CHECK(std::abs(b.ours - 5.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(b.ours - 3.5355339059327378) < 1e-12);
    REQUIRE(b.gao_per_row.size() == 2);
    CHECK(b.gao_per_row[0] == 9.0);
    CHECK(b.gao_per_row[1] == 9.0);
    CHECK(b.hr_constant == 9.0);
    CHECK(b.hr_improved_constant == doctest::Approx(6.7082039325));

    const auto same = bounds_report(theta, theta);
    CHECK(same.ours == 0.0);
    CHECK(same.three_sqrt_d == 0.0);
    CHECK(same.gao_per_row == std::vector<double>{0.0, 0.0});

    CHECK_THROWS_AS(bounds_report(theta, RealAntisymMatrix::zero(3)), Error);
}

TEST_CASE("bounds for multiples of J do not depend on d")
{
    const double theta = 0.7, theta_prime = -0.2;
    const double expected = 5.0 / std::sqrt(2.0) * std::sqrt(std::abs(theta - theta_prime));
    for (int n = 1; n <= 4; ++n) {
        const auto j = standard_J(n);
        const auto b = bounds_report(j.scaled(theta), j.scaled(theta_prime));
        CHECK(std::abs(b.ours - expected) < 1e-12);
    }
}

TEST_CASE("norm chain and bound ordering on random matrices")
{
    Rng rng = trial_rng(42, 102, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 8;
        const auto gamma = random_antisym(d, rng);
        const double op2 = std::pow(operator_norm(gamma), 2);
        const double hs2 = std::pow(hs_norm(gamma), 2);
        const double m2 = std::pow(max_entry(gamma), 2);
        CHECK(hs2 / 2.0 - op2 >= -1e-10);
        CHECK(d * (d - 1) / 2.0 * m2 - hs2 / 2.0 >= -1e-10);

        const auto b = bounds_report(gamma, RealAntisymMatrix::zero(d));
        CHECK(b.ours <= b.hs_chain + 1e-12);
        CHECK(b.ours < b.three_sqrt_d);
        for (double g : b.gao_per_row) CHECK(g >= 0.0);
    }
}
