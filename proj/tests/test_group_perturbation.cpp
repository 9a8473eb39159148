#include <doctest.h>

#include <cmath>
#include <vector>

#include "ccrlab/errors.hpp"
#include "ccrlab/group_perturbation.hpp"
#include "ccrlab/random.hpp"

using namespace ccr;

namespace {

// Oracle: Taylor series with scaling and squaring.
CMatrix taylor_exp(const CMatrix& m)
{
    int squarings = 0;
    double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const CMatrix scaled = m / std::pow(2.0, squarings);
    CMatrix term = CMatrix::Identity(m.rows(), m.cols());
    CMatrix sum = term;
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

CMatrix scalar(double x)
{
    return CMatrix::Constant(1, 1, cplx(x));
}

std::vector<double> symmetric_grid(std::initializer_list<double> magnitudes)
{
    std::vector<double> grid;
    for (double m : magnitudes) {
        grid.push_back(m);
        grid.push_back(-m);
    }
    return grid;
}

HermitianPair random_pair(Rng& rng)
{
    std::uniform_int_distribution<int> dim(2, 16);
    const int n = dim(rng);
    CMatrix a = random_hermitian(n, rng);
    CMatrix b = random_hermitian(n, rng);
    return HermitianPair(a, b);
}

} // namespace

TEST_CASE("HermitianPair validation")
{
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_WITH_AS(HermitianPair(bad, CMatrix::Zero(2, 2)), doctest::Contains("NotHermitian"), Error);
    CHECK_THROWS_WITH_AS(HermitianPair(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)),
                         doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_AS(HermitianPair(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("group_at agrees with a Taylor-series exponential")
{
    Rng rng = trial_rng(42, 500, 0);
    for (int n : {1, 3, 6}) {
        const CMatrix a = random_hermitian(n, rng);
        for (double t : {-2.0, 0.1, 1.5}) {
            const CMatrix expected = taylor_exp(cplx(0, t) * a);
            CHECK((group_at(a, t) - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("scalar examples")
{
    const HermitianPair pair(scalar(1.0), scalar(0.0));
    CHECK(pair.generator_gap() == doctest::Approx(1.0));
    for (double t : {0.1, 1.0, 3.0, -2.5}) CHECK(pair.distance(t) == doctest::Approx(2.0 * std::abs(std::sin(t / 2.0))));
    CHECK(pair.distance(2.0 * M_PI) < 1e-14);

    const HermitianPair same(scalar(0.7), scalar(0.7));
    CHECK(same.distance(5.0) == 0.0);
    CHECK(same.generator_gap() == 0.0);
    CHECK(lipschitz_audit(same, {1.0, -1.0}) == 0.0);
}

TEST_CASE("groups are unitary one-parameter groups")
{
    Rng rng = trial_rng(42, 501, 0);
    const HermitianPair pair = random_pair(rng);
    const auto n = pair.dim();
    CHECK((pair.u(0.0) - CMatrix::Identity(n, n)).norm() < 1e-13);
    CHECK(unitarity_residual(pair.v(3.0)) < 1e-12);
    CHECK((pair.u(0.4) * pair.u(0.9) - pair.u(1.3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pair.u(-0.4) - pair.u(0.4).adjoint()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("lipschitz_audit")
{
    const HermitianPair pair(scalar(1.0), scalar(0.0));
    CHECK(lipschitz_audit(pair, {0.0, 1e-3}) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_WITH_AS(lipschitz_audit(pair, {}), doctest::Contains("EmptyGrid"), Error);
    CHECK_THROWS_AS(lipschitz_audit(pair, {0.0}), Error);
}

TEST_CASE("difference quotient")
{
    const HermitianPair pair(scalar(1.0), scalar(0.0));
    CHECK_THROWS_AS(difference_quotient(pair, 0.0), Error);
    // |(e^{it} - 1)/t - i| = t/2 + O(t^3)
    CHECK(difference_quotient(pair, 1e-3) == doctest::Approx(5e-4).epsilon(1e-4));
    CHECK(recovered_generator_gap(pair, 1e-5) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("second_order_forgiveness")
{
    const HermitianPair pair(scalar(1.0), scalar(0.0));
    std::vector<double> wide;
    for (int i = -400; i <= 400; ++i) wide.push_back(0.25 * i);
    CHECK(second_order_forgiveness(pair, 1.0, 1.0, 0.5, wide));
    CHECK_THROWS_WITH_AS(second_order_forgiveness(pair, 0.5, 0.0, 0.5, wide), doctest::Contains("HypothesisUnmet"),
                         Error);
}

TEST_CASE("random pairs")
{
    const std::vector<double> grid = symmetric_grid({0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0});
    std::vector<double> forgiveness_grid;
    for (int i = -200; i <= 200; ++i) forgiveness_grid.push_back(0.25 * i);

    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = trial_rng(42, 502, trial);
        const HermitianPair pair = random_pair(rng);
        const double gap = pair.generator_gap();
        CAPTURE(trial);

        CHECK(lipschitz_audit(pair, grid) <= gap + 1e-9);

        const auto [excess, asym] = subadditivity_audit(pair, 0.3, 0.7);
        CHECK(excess <= 1e-10);
        CHECK(asym <= 1e-10);

        const double ratio = difference_quotient(pair, 1e-2) / difference_quotient(pair, 1e-3);
        CHECK(ratio >= 5.0);
        CHECK(ratio <= 20.0);

        CHECK(std::abs(recovered_generator_gap(pair, 1e-5) - gap) < 1e-6);

        if (trial % 10 == 0) CHECK(second_order_forgiveness(pair, gap, 1.0, 0.5, forgiveness_grid));
    }
}
