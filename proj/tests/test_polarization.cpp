// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "stdce/errors.hpp"
#include "stdce/polarization.hpp"

using namespace stdce;

namespace {

using C = std::complex<double>;
using CVec = std::array<C, 3>;

double dot3(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Plane wave e exp(i K.r).
CVec plane_field(const Vec3& K, const Vec3& e, const Vec3& r)
{
    const C ph = std::exp(C(0.0, dot3(K, r)));
    return {e[0] * ph, e[1] * ph, e[2] * ph};
}

C dotc(const CVec& a, const CVec& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Coupling of two fields at the origin by central differences:
// W = d_z(E1.E2) - z.[E1 x (curl E2)/w2 + E2 x (curl E1)/w1], c = Omega = 1.
C coupling_from_fields(const Vec3& K1, const Vec3& e1, const Vec3& K2, const Vec3& e2)
{
    const double h = 1e-5;
    const double w1 = std::sqrt(dot3(K1, K1));
    const double w2 = std::sqrt(dot3(K2, K2));
    auto d = [&](const Vec3& K, const Vec3& e, int axis, int comp) {
        Vec3 p{0.0, 0.0, 0.0}, q{0.0, 0.0, 0.0};
        p[axis] = h;
        q[axis] = -h;
        return (plane_field(K, e, p)[comp] - plane_field(K, e, q)[comp]) / (2.0 * h);
    };
    auto curl = [&](const Vec3& K, const Vec3& e) {
        return CVec{d(K, e, 1, 2) - d(K, e, 2, 1), d(K, e, 2, 0) - d(K, e, 0, 2),
                    d(K, e, 0, 1) - d(K, e, 1, 0)};
    };
    const Vec3 o{0.0, 0.0, 0.0};
    const Vec3 up{0.0, 0.0, h}, down{0.0, 0.0, -h};
    const C dz = (dotc(plane_field(K1, e1, up), plane_field(K2, e2, up)) -
                  dotc(plane_field(K1, e1, down), plane_field(K2, e2, down))) /
                 (2.0 * h);
    const CVec E1 = plane_field(K1, e1, o), E2 = plane_field(K2, e2, o);
    const CVec c1 = curl(K1, e1), c2 = curl(K2, e2);
    const C z12 = E1[0] * c2[1] - E1[1] * c2[0];
    const C z21 = E2[0] * c1[1] - E2[1] * c1[0];
    return dz - (z12 / w2 + z21 / w1);
}

}  // namespace

TEST_SUITE("polarization")
{
    TEST_CASE("basis is orthonormal and transverse")
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        for (int n = 0; n < 200; ++n) {
            const Vec3 K{U(rng), U(rng), U(rng)};
            const auto b = polarization_basis(K);
            CHECK(dot3(b.te, b.te) == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(dot3(b.tm, b.tm) == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(dot3(b.te, b.tm)) < 1e-14);
            CHECK(std::abs(dot3(b.te, K)) < 1e-14);
            CHECK(std::abs(dot3(b.tm, K)) < 1e-14);
            CHECK(std::abs(b.te[2]) < 1e-15);  // TE lies in the plane
        }
        const auto axis = polarization_basis(Vec3{0.0, 0.0, 2.0});
        CHECK(axis.te == Vec3{1.0, 0.0, 0.0});
    }

    TEST_CASE("normal emission by hand")
    {
        // Both photons along +z: W = (u v/u + v u/v) e1.e2 = 1 for equal
        // polarizations and 0 otherwise. Back to back k2z = -v gives
        // W = (v - u) e1.e2, which vanishes only at u = v.
        for (double u : {0.2, 0.5, 0.9}) {
            const double v = 1.0 - u;
            const auto a = linear_amplitudes({0, 0, u}, {0, 0, v});
            CHECK(a.w[0][0] == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(a.w[1][1] == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(a.w[0][1] == 0.0);
            CHECK(a.w[1][0] == 0.0);
            const auto back = linear_amplitudes({0, 0, u}, {0, 0, -v});
            CHECK(std::abs(back.w[0][0]) == doctest::Approx(std::abs(v - u)).epsilon(1e-14));
            CHECK(std::abs(back.w[1][1]) == doctest::Approx(std::abs(v - u)).epsilon(1e-14));
            CHECK(back.w[0][1] == 0.0);
        }
    }

    TEST_CASE("closed form against the field coupling")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int n = 0; n < 100; ++n) {
            const double u = 0.05 + 0.9 * U(rng);
            const double v = 1.0 - u;
            auto dir = [&](double w) {
                const double th = std::acos(2.0 * U(rng) - 1.0);
                const double ph = 2.0 * kPi * U(rng);
                return Vec3{w * std::sin(th) * std::cos(ph), w * std::sin(th) * std::sin(ph),
                            w * std::cos(th)};
            };
            const Vec3 K1 = dir(u), K2 = dir(v);
            const auto b1 = polarization_basis(K1), b2 = polarization_basis(K2);
            const auto a = linear_amplitudes(K1, K2);
            const Vec3* e1[2] = {&b1.te, &b1.tm};
            const Vec3* e2[2] = {&b2.te, &b2.tm};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    // The field coupling is -i times the real amplitude.
                    const C w = coupling_from_fields(K1, *e1[i], K2, *e2[j]);
                    CHECK(std::abs(w - C(0.0, -a.w[i][j])) < 1e-8);
                }
        }
    }

    TEST_CASE("exchange symmetry and circular sum rule")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> U(-0.6, 0.6);
        for (int n = 0; n < 100; ++n) {
            const double u = 0.3 + 0.4 * std::abs(U(rng));
            const Vec2 k1{U(rng) * u, U(rng) * u};
            const Vec2 k2{U(rng) * (1 - u), U(rng) * (1 - u)};
            const auto m1 = make_mode(k1, u, 1, Polarization::TE);
            const auto m2 = make_mode(k2, 1.0 - u, -1, Polarization::TM);
            auto m1b = m1, m2b = m2;
            m1b.pol = Polarization::TM;
            m2b.pol = Polarization::TE;
            CHECK(w_tilde(m1, m2) == doctest::Approx(w_tilde(m2, m1)).epsilon(1e-13));
            CHECK(w_tilde(m1b, m2b) == doctest::Approx(w_tilde(m2b, m1b)).epsilon(1e-13));

            const auto a = linear_amplitudes(m1.wavevector(), m2.wavevector());
            double lin = 0.0, circ = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    lin += a.w[i][j] * a.w[i][j];
            for (auto p1 : {Polarization::R, Polarization::L})
                for (auto p2 : {Polarization::R, Polarization::L})
                    circ += w_tilde_squared_circular(m1, m2, p1, p2);
            CHECK(circ == doctest::Approx(lin).epsilon(1e-13));
            // Partner summed over its linear basis: R and L carry half of TE + TM.
            double r = 0.0, l = 0.0;
            for (auto p2 : {Polarization::TE, Polarization::TM}) {
                r += std::norm(circular_amplitude(a, Polarization::R, p2));
                l += std::norm(circular_amplitude(a, Polarization::L, p2));
            }
            CHECK(r + l == doctest::Approx(lin).epsilon(1e-13));
        }
    }

    TEST_CASE("mode construction")
    {
        const auto m = make_mode({0.3, 0.4}, 1.0, -1, Polarization::TE);
        CHECK(m.kz == doctest::Approx(-std::sqrt(0.75)));
        CHECK(on_shell(m));
        CHECK_THROWS_AS(make_mode({0.9, 0.9}, 1.0, 1, Polarization::TE), ParameterError);
        CHECK_THROWS_AS(make_mode({0.0, 0.0}, 0.0, 1, Polarization::TE), ParameterError);
        auto circ = m;
        circ.pol = Polarization::R;
        CHECK_THROWS_AS(w_tilde(circ, m), ParameterError);
        CHECK(polarization_from_string("tm") == Polarization::TM);
        CHECK(std::string(to_string(Polarization::L)) == "L");
        CHECK_THROWS_AS(polarization_from_string("X"), ParameterError);
    }
}
