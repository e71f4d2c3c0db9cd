// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "stdce/bessel.hpp"
#include "stdce/bessel_mode.hpp"
#include "stdce/core_params.hpp"

using namespace stdce;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

double reference_j(int n, double x)
{
    return static_cast<double>(boost::math::cyl_bessel_j(Big(n), Big(x)));
}

}  // namespace

TEST_SUITE("bessel")
{
    TEST_CASE("J_n against 50-digit reference")
    {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> X(0.0, 80.0);
        std::uniform_int_distribution<int> N(-40, 40);
        double worst = 0.0;
        for (int i = 0; i < 300; ++i) {
            const int n = N(rng);
            const double x = i % 10 == 0 ? X(rng) * 1e-7 : X(rng);
            worst = std::max(worst, std::abs(bessel_j(n, x) - reference_j(n, x)));
        }
        CHECK(worst < 1e-13);
        for (double x : {250.0, 1234.5, 9999.0})
            for (int n : {0, 1, 7, 60})
                CHECK(std::abs(bessel_j(n, x) - reference_j(n, x)) < 1e-13);
    }

    TEST_CASE("negative argument and order symmetry")
    {
        for (int n = -6; n <= 6; ++n) {
            const double s = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(bessel_j(n, -3.7) == doctest::Approx(s * bessel_j(n, 3.7)).epsilon(1e-14));
            CHECK(bessel_j(-n, 3.7) == doctest::Approx(s * bessel_j(n, 3.7)).epsilon(1e-14));
        }
        CHECK(bessel_j(0, 0.0) == 1.0);
        CHECK(bessel_j(3, 0.0) == 0.0);
    }

    TEST_CASE("batched orders match single evaluations")
    {
        for (double x : {0.0, 1e-9, 0.5, 17.0, 300.0}) {
            const auto all = bessel_j_orders(50, x);
            // Different recurrence starts agree to rounding in absolute terms.
            for (int n = 0; n <= 50; ++n)
                CHECK(std::abs(all[n] - bessel_j(n, x)) < 1e-15);
            std::vector<double> out(21), scratch;
            bessel_j_range(-10, 10, x, out.data(), scratch);
            for (int n = -10; n <= 10; ++n)
                CHECK(std::abs(out[n + 10] - bessel_j(n, x)) < 1e-15);
        }
    }

    TEST_CASE("derivative identity")
    {
        for (int n : {0, 1, 5})
            for (double x : {0.3, 4.0, 25.0}) {
                const double h = 1e-5;
                const double fd = (bessel_j(n, x + h) - bessel_j(n, x - h)) / (2.0 * h);
                CHECK(bessel_j_derivative(n, x) == doctest::Approx(fd).epsilon(1e-8));
            }
    }

    TEST_CASE("vector Bessel mode is transverse and on shell")
    {
        // div E = 0 checked by central differences in Cartesian coordinates.
        const BesselMode mode{0.6, 0.5, -1, 2};
        CHECK(mode.omega() == doctest::Approx(std::hypot(0.6, 0.5)));
        const double h = 1e-5;
        auto E = [&](double x, double y, double z) {
            return bessel_mode_field_cartesian(mode, std::hypot(x, y), std::atan2(y, x), z);
        };
        for (double x : {0.7, -1.9, 3.1}) {
            const double y = 0.4 * x + 1.0, z = 0.2;
            const auto div = (E(x + h, y, z)[0] - E(x - h, y, z)[0]) / (2 * h) +
                             (E(x, y + h, z)[1] - E(x, y - h, z)[1]) / (2 * h) +
                             (E(x, y, z + h)[2] - E(x, y, z - h)[2]) / (2 * h);
            CHECK(std::abs(div) < 1e-8);
        }
        CHECK(bessel_mode_norm() == doctest::Approx(1.0 / (std::sqrt(2.0) * 2.0 * kPi)));
    }
}
