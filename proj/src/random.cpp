#include "ccrlab/random.hpp"

namespace ccr {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

RealAntisymMatrix random_antisym(int d, Rng& rng, double scale)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    RMatrix m = RMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        for (int l = k + 1; l < d; ++l) {
            m(k, l) = u(rng);
            m(l, k) = -m(k, l);
        }
    }
    return RealAntisymMatrix::validate(m);
}

CMatrix random_hermitian(int n, Rng& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = cplx(u(rng), u(rng));
    return 0.5 * (g + g.adjoint());
}

CVector random_cvector(int m, Rng& rng, double max_norm)
{
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CVector v(m);
    for (int i = 0; i < m; ++i) v(i) = cplx(gauss(rng), gauss(rng));
    const double n = v.norm();
    if (n == 0.0) return CVector::Zero(m);
    return (max_norm * u(rng) / n) * v;
}

} // namespace ccr
