// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <random>

#include "doctest.h"
#include "stdce/kernels.hpp"

using namespace stdce;

namespace {

bool same_bits(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_bits(a[i], b[i]))
            return false;
    return true;
}

const int kThreadCounts[] = {1, 2, 3};

}  // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("array-factor sum")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> d(-3.0, 3.0);
        const CubicLattice g{17, 13, 4, 0.37};
        for (int t : kThreadCounts) {
            set_thread_count(t);
            CHECK(thread_count() == t);
            for (int c = 0; c < 5; ++c) {
                const Vec3 dk{d(rng), d(rng), d(rng)};
                const Vec3 o{d(rng), d(rng), 0.0};
                CHECK(same_bits(serial::af_sum(dk, g, o), omp::af_sum(dk, g, o)));
            }
        }
    }

    TEST_CASE("spectral and density grids")
    {
        std::vector<SpectralPoint> sp;
        for (double w : {0.2, 0.5, 0.8})
            for (Polarization p : {Polarization::TE, Polarization::TM})
                sp.push_back({w, 0.0, p});
        std::vector<DensityPoint> dp;
        for (double th : {0.2, 0.9})
            for (double ph : {0.0, 1.0, 3.0})
                dp.push_back({th, ph, 0.45, {0.3, 0.1}, Polarization::TM, 1});
        const LinearOptions opt;
        const auto s_ref = serial::spectral_grid(sp, opt);
        const auto d_ref = serial::density_grid(dp, opt);
        for (int t : kThreadCounts) {
            set_thread_count(t);
            CHECK(same_bits(s_ref, omp::spectral_grid(sp, opt)));
            CHECK(same_bits(d_ref, omp::density_grid(dp, opt)));
        }
    }

    TEST_CASE("rate grid")
    {
        const std::vector<RatePoint> pts{{0.0, Polarization::TE}, {1.2, Polarization::TM},
                                         {0.0, Polarization::TM}};
        const auto ref = serial::rate_grid(pts, {});
        for (int t : kThreadCounts) {
            set_thread_count(t);
            const auto got = omp::rate_grid(pts, {});
            REQUIRE(got.size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(same_bits(got[i].value, ref[i].value));
                CHECK(same_bits(got[i].error, ref[i].error));
            }
        }
    }

    TEST_CASE("spinning grids and weights")
    {
        SpinningOptions o;
        o.R = 2.0;
        const std::vector<double> u{0.2, 0.5, 0.75};
        const auto g_ref = serial::spinning_grid(u, -2, 3, 1, o);
        const auto w_ref = serial::spinning_weights(u, 0, default_m_max(2.0, 0), o);
        for (int t : kThreadCounts) {
            set_thread_count(t);
            const auto g = omp::spinning_grid(u, -2, 3, 1, o);
            REQUIRE(g.f.size() == g_ref.f.size());
            for (std::size_t i = 0; i < g.f.size(); ++i)
                CHECK(same_bits(g.f[i], g_ref.f[i]));
            const auto w = omp::spinning_weights(u, 0, default_m_max(2.0, 0), o);
            REQUIRE(w.size() == w_ref.size());
            for (std::size_t i = 0; i < w.size(); ++i) {
                CHECK(same_bits(w[i].per_m, w_ref[i].per_m));
                CHECK(same_bits(w[i].sum, w_ref[i].sum));
                CHECK(same_bits(w[i].density, w_ref[i].density));
            }
        }
        set_thread_count(1);
    }
}
