// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "stdce/bessel.hpp"
#include "stdce/errors.hpp"
#include "stdce/radial_integrals.hpp"

using namespace stdce;

namespace {

// int_0^R y^p J_a(k y) J_b(k' y) dy by adaptive Gauss-Kronrod.
double product_integral(int p, int a, int b, double k, double kp, double R)
{
    auto f = [&](double y) {
        return (p == 1 ? y : 1.0) * bessel_j(a, k * y) * bessel_j(b, kp * y);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, R, 25, 1e-14);
}

}  // namespace

TEST_SUITE("radial_integrals")
{
    TEST_CASE("nine integrals against adaptive quadrature")
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        std::uniform_int_distribution<int> M(-6, 6), L(-2, 2);
        for (int n = 0; n < 40; ++n) {
            const int m = M(rng), ell = L(rng);
            const double k = 1e-3 + U(rng), kp = 1e-3 + U(rng), R = 0.5 + 12.0 * U(rng);
            const auto I = radial_integrals(m, ell, k, kp, R, 1e-11);
            const double s = ((m - ell) % 2 == 0) ? 1.0 : -1.0;
            const double tol = 1e-9;
            auto near = [&](double got, double ref) {
                return std::abs(got - ref) <= tol * std::max(1.0, std::abs(ref));
            };
            CHECK(near(I.H_plus, -s * product_integral(1, m + 1, m + 1 - ell, k, kp, R)));
            CHECK(near(I.H_minus, -s * product_integral(1, m - 1, m - 1 - ell, k, kp, R)));
            CHECK(near(I.H0, s * product_integral(1, m, m - ell, k, kp, R)));
            CHECK(near(I.I_plus, -s * product_integral(1, m + 1, m - 1 - ell, k, kp, R)));
            CHECK(near(I.I_minus, -s * product_integral(1, m - 1, m + 1 - ell, k, kp, R)));
            CHECK(near(I.J_plus, -s * product_integral(0, m, m - 1 - ell, k, kp, R)));
            CHECK(near(I.J_minus, -s * product_integral(0, m, m + 1 - ell, k, kp, R)));
            CHECK(near(I.K_plus, s * product_integral(0, m + 1, m - ell, k, kp, R)));
            CHECK(near(I.K_minus, s * product_integral(0, m - 1, m - ell, k, kp, R)));
        }
    }

    TEST_CASE("Lommel closed form, off and on the diagonal")
    {
        for (int m : {0, 1, 4, -3})
            for (auto [k, kp] : {std::pair{0.3, 0.8}, std::pair{1.7, 1.7}, std::pair{2.0, 0.0}}) {
                const double R = 7.5;
                const double ref = product_integral(1, m, m, k, kp, R);
                CHECK(lommel_closed(m, k, kp, R) ==
                      doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
            }
        // Diagonal by hand at m = 0: (R^2/2)(J0^2 + J1^2).
        const double x = 3.0;
        CHECK(lommel_closed(0, 1.0, 1.0, x) ==
              doctest::Approx(0.5 * x * x * (std::pow(bessel_j(0, x), 2) + std::pow(bessel_j(1, x), 2)))
                  .epsilon(1e-14));
        CHECK_THROWS_AS(lommel_closed(0, -1.0, 1.0, 1.0), ParameterError);
    }

    TEST_CASE("large radius: diagonal grows linearly, off-diagonal stays bounded")
    {
        const auto p = weber_schafheitlin_probe(2, 0.8, 0.5);
        REQUIRE(p.radii.size() == 3);
        const double slope = (p.diagonal[2] - p.diagonal[1]) / (p.radii[2] - p.radii[1]);
        CHECK(slope == doctest::Approx(p.slope_limit).epsilon(0.02));
        for (double v : p.off_diagonal)
            CHECK(std::abs(v) < 5.0);
    }
}
