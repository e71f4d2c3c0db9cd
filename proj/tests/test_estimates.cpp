// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"
#include "stdce/estimates.hpp"

using namespace stdce;

TEST_SUITE("estimates")
{
    TEST_CASE("mirror rate by hand")
    {
        // A Omega^5 Delta^2 / (15 (2 pi)^2 c^4) with A = 1 m^2, Omega = c rad/s,
        // Delta = 1 m reduces to c / (15 (2 pi)^2).
        const double c = kSpeedOfLight;
        CHECK(mirror_rate(1.0, c, 1.0) == doctest::Approx(c / (15.0 * 4.0 * kPi * kPi)).epsilon(1e-14));
        CHECK(mirror_rate(2.0, c, 3.0) == doctest::Approx(18.0 * c / (15.0 * 4.0 * kPi * kPi)).epsilon(1e-14));
        CHECK(mirror_rate(1.0, 1.0, 0.0) == 0.0);
    }

    TEST_CASE("waveguide rate by hand")
    {
        // (Omega / 12 pi)(v/c)^2 at Omega = 12 pi, v/c = 0.5.
        CHECK(waveguide_rate(12.0 * kPi, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
        CHECK_THROWS_AS(waveguide_rate(1.0, 1.0), ParameterError);
    }

    TEST_CASE("acoustic bound by hand")
    {
        const auto b = acoustic_bound(5000.0, 2.0 * kPi * 1e4);
        CHECK(b.v_max == doctest::Approx(50.0));
        CHECK(b.delta_max == doctest::Approx(50.0 / (2.0 * kPi * 1e4)));
    }

    TEST_CASE("meta-mirror rate is the zero-kick coefficient times Gamma0")
    {
        const double coef = metamirror_coefficient();
        CHECK(coef == doctest::Approx(0.3430818644).epsilon(1e-9));
        ModulationSpec spec;
        spec.omega_mod = 1e5;
        spec.amplitude = 1e-8;
        const double g0 = norm_gamma0(spec, 1e13, AtomicSpecies{1e-28}, 1e-8);
        CHECK(metamirror_rate(1e-8, 1e13, 1e-28, 1e5, 1e-8) == doctest::Approx(coef * g0).epsilon(1e-14));
    }

    TEST_CASE("built-in scenarios")
    {
        const auto all = builtin_scenarios();
        REQUIRE(all.size() == 3);
        const auto mirror = evaluate(*find_builtin("mirror"));
        CHECK(mirror.log10_rate == doctest::Approx(std::log10(mirror.rate)));
        CHECK(std::abs(mirror.log10_rate + 21.0) < 0.5);
        const auto wg = evaluate(*find_builtin("waveguide"));
        CHECK(wg.rate == doctest::Approx(11e9 * 0.05 * 0.05 / 6.0).epsilon(1e-14));
        CHECK_FALSE(find_builtin("nope"));
    }

    TEST_CASE("scenario JSON round trip and validation")
    {
        const auto rb = *find_builtin("rb87");
        const auto back = scenario_from_json(scenario_to_json(rb));
        CHECK(back.name == rb.name);
        CHECK(back.kind == rb.kind);
        CHECK(*back.density == *rb.density);
        CHECK(*back.alpha0 == *rb.alpha0);
        CHECK(evaluate(back).rate == evaluate(rb).rate);

        nlohmann::json j = {{"kind", "MetaMirror"}, {"area", 1.0}, {"omega", 1.0}};
        CHECK_THROWS_AS(scenario_from_json(j), ParameterError);  // missing delta, alpha0, density
        j = {{"kind", "Waveguide1D"}, {"omega", 1.0}, {"v_eff_over_c", "fast"}};
        CHECK_THROWS_AS(scenario_from_json(j), ParameterError);
    }
}
