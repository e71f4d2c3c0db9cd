// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"

using namespace stdce;

TEST_SUITE("core_params")
{
    TEST_CASE("unit conversion by hand")
    {
        ModulationSpec spec;
        spec.omega_mod = 2.0 * kPi * 1e6;
        spec.amplitude = 1e-9;
        spec.phase = LinearKick{{1e-3, -2e-3}};
        const CubicLattice g{50, 40, 2, 0.5};
        const auto ctx = to_dimensionless(spec, g);

        const double unit = 299792458.0 / (2.0 * kPi * 1e6);  // 47.7134... m
        CHECK(ctx.length_unit_si == doctest::Approx(unit).epsilon(1e-15));
        CHECK(ctx.amplitude == doctest::Approx(1e-9 / unit).epsilon(1e-15));
        REQUIRE(ctx.kick);
        CHECK((*ctx.kick)[0] == doctest::Approx(1e-3 * unit).epsilon(1e-15));
        CHECK((*ctx.kick)[1] == doctest::Approx(-2e-3 * unit).epsilon(1e-15));
        REQUIRE(ctx.extent);
        CHECK((*ctx.extent)[0] == doctest::Approx(25.0 / unit).epsilon(1e-15));
        CHECK((*ctx.extent)[2] == doctest::Approx(1.0 / unit).epsilon(1e-15));
        CHECK(ctx.small_amplitude);
        CHECK(ctx.warnings.empty());
    }

    TEST_CASE("round trip of the modulation")
    {
        ModulationSpec spec;
        spec.omega_mod = 3.7e4;
        spec.amplitude = 2e-7;
        spec.phase = LinearKick{{4e-5, 1e-5}};
        const auto back = modulation_from_dimensionless(to_dimensionless(spec, PeriodicMonolayer{1e18}));
        CHECK(back.omega_mod == spec.omega_mod);
        CHECK(back.amplitude == doctest::Approx(spec.amplitude).epsilon(1e-14));
        const auto& k = std::get<LinearKick>(back.phase);
        CHECK(k.beta[0] == doctest::Approx(4e-5).epsilon(1e-14));
        CHECK(k.beta[1] == doctest::Approx(1e-5).epsilon(1e-14));

        ModulationSpec spin = spec;
        spin.phase = SpinningCharge{3};
        const auto ctx = to_dimensionless(spin, CylindricalStack{1e-3, 1e18, 1, 1e-6});
        REQUIRE(ctx.ell);
        CHECK(*ctx.ell == 3);
        CHECK(std::get<SpinningCharge>(modulation_from_dimensionless(ctx).phase).ell == 3);
    }

    TEST_CASE("large amplitude is a warning, not an error")
    {
        ModulationSpec spec;
        spec.omega_mod = 1e9;
        spec.amplitude = 0.2 * kSpeedOfLight / 1e9;
        const auto ctx = to_dimensionless(spec, PeriodicMonolayer{1.0});
        CHECK_FALSE(ctx.small_amplitude);
        CHECK(ctx.warnings.size() == 1);
    }

    TEST_CASE("normalizations by hand")
    {
        ModulationSpec spec;
        spec.omega_mod = 2.0;
        spec.amplitude = 3.0;
        const AtomicSpecies atom{5.0};
        const double c = kSpeedOfLight;
        const double pref = 16.0 * std::pow(2.0 * kPi, 3);
        // r0 = alpha0^2 Omega^3 Delta^2 / [16 (2pi)^3 c^2 (Nx Ny Nz)^2]
        const double r0 = 25.0 * 8.0 * 9.0 / (pref * c * c * std::pow(2.0 * 3.0 * 4.0, 2));
        CHECK(norm_r0(spec, CubicLattice{2, 3, 4, 1.0}, atom) == doctest::Approx(r0).epsilon(1e-14));
        // Gamma0 = A nS^2 alpha0^2 Omega^7 Delta^2 / [16 (2pi)^3 c^6]
        const double g0 = 7.0 * 121.0 * 25.0 * 128.0 * 9.0 / (pref * std::pow(c, 6));
        CHECK(norm_gamma0(spec, 11.0, atom, 7.0) == doctest::Approx(g0).epsilon(1e-14));
    }

    TEST_CASE("invalid parameters are rejected")
    {
        ModulationSpec ok;
        ok.omega_mod = 1.0;
        ModulationSpec bad = ok;
        bad.omega_mod = 0.0;
        CHECK_THROWS_AS(to_dimensionless(bad, PeriodicMonolayer{1.0}), ParameterError);
        bad = ok;
        bad.amplitude = -1.0;
        CHECK_THROWS_AS(validate(bad), ParameterError);
        CHECK_THROWS_AS(validate(ArrayGeometry{CubicLattice{0, 1, 1, 1.0}}), ParameterError);
        CHECK_THROWS_AS(validate(ArrayGeometry{CubicLattice{1, 1, 1, 0.0}}), ParameterError);
        CHECK_THROWS_AS(validate(ArrayGeometry{PeriodicMonolayer{-1.0}}), ParameterError);
        CHECK_THROWS_AS(validate(AtomicSpecies{0.0}), ParameterError);
        CHECK_THROWS_AS(norm_r0(ok, PeriodicMonolayer{1.0}, AtomicSpecies{1.0}), ParameterError);
    }
}
