// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "stdce/emission_region.hpp"
#include "stdce/linear_emission.hpp"

using namespace stdce;

TEST_SUITE("emission_region")
{
    TEST_CASE("zero kick: full hemisphere for the low photon, a cone for the high one")
    {
        const auto low = emission_region(0.3, 0.0, PhotonRole::Low);
        CHECK(low.contains_normal);
        CHECK(low.fully_allowed);
        CHECK_FALSE(low.island);
        // omega1 = 0.7: |k1| <= 0.3 -> sin(theta) <= 3/7.
        const auto high = emission_region(0.7, 0.0, PhotonRole::High);
        CHECK(high.contains_normal);
        CHECK_FALSE(high.touches_grazing);
        for (const auto& s : high.slices)
            CHECK(s.s_hi == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
    }

    TEST_CASE("island of the high-frequency photon")
    {
        const auto r = emission_region(0.7, 0.35, PhotonRole::High);
        CHECK(r.island);
        CHECK_FALSE(r.contains_normal);
        CHECK_FALSE(r.touches_grazing);
        CHECK(emission_region(0.7, 0.45, PhotonRole::High).touches_grazing);
        CHECK(emission_region(0.7, 1.05, PhotonRole::High).empty);
    }

    TEST_CASE("slices agree with the partner kinematics")
    {
        const double w = 0.3, b = 0.5;
        const auto r = emission_region(w, b, PhotonRole::Low, 181);
        for (const auto& s : r.slices) {
            if (!s.allowed)
                continue;
            const double mid = 0.5 * (s.s_lo + s.s_hi);
            const Vec2 k{w * mid * std::cos(s.phi), w * mid * std::sin(s.phi)};
            CHECK_FALSE(partner(k, w, {b, 0.0}).evanescent);
        }
    }

    TEST_CASE("critical kicks")
    {
        auto find = [](const std::vector<CriticalKick>& v, RegionTransition t) {
            for (const auto& c : v)
                if (c.kind == t)
                    return c.beta;
            return -1.0;
        };
        const auto hi = critical_kicks(0.7, PhotonRole::High);
        CHECK(find(hi, RegionTransition::NormalExcluded) == doctest::Approx(0.3).epsilon(1e-6));
        CHECK(find(hi, RegionTransition::GrazingContact) == doctest::Approx(0.4).epsilon(1e-6));
        CHECK(find(hi, RegionTransition::Collapse) == doctest::Approx(1.0).epsilon(1e-6));
        const auto lo = critical_kicks(0.3, PhotonRole::Low);
        CHECK(find(lo, RegionTransition::ForbiddenOnset) == doctest::Approx(0.4).epsilon(1e-6));
        CHECK(find(lo, RegionTransition::NormalExcluded) == doctest::Approx(0.7).epsilon(1e-6));
        CHECK(std::string(to_string(RegionTransition::Collapse)) == "collapse");
    }
}
