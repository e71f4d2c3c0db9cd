// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "stdce/array_factors.hpp"
#include "stdce/errors.hpp"

using namespace stdce;

namespace {

// Plain loop over atoms at R = d (mx, my, mz), 1 <= m <= N.
double naive_sum(const Vec3& dk, const CubicLattice& g)
{
    std::complex<double> s = 0.0;
    for (int a = 1; a <= g.nx; ++a)
        for (int b = 1; b <= g.ny; ++b)
            for (int c = 1; c <= g.nz; ++c)
                s += std::exp(std::complex<double>(
                    0.0, g.spacing * (dk[0] * a + dk[1] * b + dk[2] * c)));
    return std::norm(s);
}

}  // namespace

TEST_SUITE("array_factors")
{
    TEST_CASE("Dirichlet kernel at its removable singularities")
    {
        CHECK(dirichlet_squared(0.0, 7, 3.5) == 49.0);
        // x = dk L / 2N = pi  ->  dk = 2 pi N / L
        CHECK(dirichlet_squared(2.0 * kPi * 7 / 3.5, 7, 3.5) == doctest::Approx(49.0).epsilon(1e-12));
        CHECK(dirichlet_squared(-4.0 * kPi * 7 / 3.5, 7, 3.5) == doctest::Approx(49.0).epsilon(1e-12));
        // First zero at N x = pi.
        CHECK(dirichlet_squared(2.0 * kPi / 3.5, 7, 3.5) < 1e-25);
        CHECK(dirichlet_squared(0.3, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("closed forms against a plain atom loop")
    {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        std::uniform_int_distribution<int> N(1, 12), Nz(1, 4);
        for (int n = 0; n < 200; ++n) {
            CubicLattice g{N(rng), N(rng), Nz(rng), 0.3 + std::abs(U(rng))};
            const Vec3 dk{4.0 * U(rng), 4.0 * U(rng), 4.0 * U(rng)};
            const double closed = af1_closed({{dk[0], dk[1]}, 0.0, g}) *
                                  af2_closed(dk[2], g.nz, g.length_z());
            const double ref = naive_sum(dk, g);
            CHECK(std::abs(closed - ref) <= 1e-10 * std::max(ref, 1.0));
            CHECK(af_discrete_oracle(dk, g) == doctest::Approx(ref).epsilon(1e-10));
        }
    }

    TEST_CASE("atom sum does not depend on the lattice origin")
    {
        const CubicLattice g{6, 5, 3, 0.7};
        const Vec3 dk{0.4, -1.3, 2.2};
        const double a = af_discrete_oracle(dk, g);
        const double b = af_discrete_oracle_shifted(dk, g, {10.0, -3.0, 0.25});
        CHECK(b == doctest::Approx(a).epsilon(1e-12));
    }

    TEST_CASE("oracle refuses oversized arrays")
    {
        CHECK_THROWS_AS(af_discrete_oracle({0, 0, 0}, CubicLattice{1000, 1000, 2, 1.0}),
                        ResourceError);
        CHECK_THROWS_AS(af2_closed(0.1, 0, 1.0), ParameterError);
    }

    TEST_CASE("lattice momentum bookkeeping")
    {
        // d = 0.5 c/Omega: G = 4 pi, far beyond any photon momentum.
        auto r = lattice_momentum_rule({0.2, 0.1}, {0.1, -0.1}, {0.3, 0.0}, 0.5);
        CHECK(r.satisfied);
        CHECK(r.qx == 0);
        CHECK(r.qy == 0);
        CHECK(r.propagative);
        CHECK(r.only_zero_order);

        // Umklapp: k1 + k2 - beta = G along x with d = 10 (G ~ 0.628).
        const double G = 2.0 * kPi / 10.0;
        r = lattice_momentum_rule({0.3, 0.0}, {0.2 + G, 0.0}, {0.5, 0.0}, 10.0);
        CHECK(r.satisfied);
        CHECK(r.qx == 1);
        CHECK_FALSE(r.propagative);  // |beta + G| > 1
        CHECK_FALSE(r.only_zero_order);

        r = lattice_momentum_rule({0.3, 0.0}, {0.25, 0.0}, {0.5, 0.0}, 0.5);
        CHECK_FALSE(r.satisfied);
        CHECK_THROWS_AS(lattice_momentum_rule({0, 0}, {0, 0}, {0, 0}, 0.0), ParameterError);
    }
}
