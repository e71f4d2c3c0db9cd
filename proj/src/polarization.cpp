// SPDX-License-Identifier: Apache-2.0
#include "stdce/polarization.hpp"

#include <cmath>

#include "stdce/errors.hpp"
#include "stdce/vec3.hpp"

namespace stdce {

const char* to_string(Polarization p)
{
    switch (p) {
    case Polarization::TE: return "TE";
    case Polarization::TM: return "TM";
    case Polarization::R: return "R";
    case Polarization::L: return "L";
    }
    return "?";
}

Polarization polarization_from_string(const std::string& s)
{
    if (s == "TE" || s == "te") return Polarization::TE;
    if (s == "TM" || s == "tm") return Polarization::TM;
    if (s == "R" || s == "r") return Polarization::R;
    if (s == "L" || s == "l") return Polarization::L;
    throw ParameterError("unknown polarization '" + s + "'");
}

PlaneWaveMode make_mode(const Vec2& k, double omega, int zeta, Polarization pol)
{
    if (!(omega > 0.0))
        throw ParameterError("photon frequency must be positive");
    const double q = omega * omega - (k[0] * k[0] + k[1] * k[1]);
    if (q < -1e-12 * omega * omega)
        throw ParameterError("in-plane momentum exceeds omega/c: evanescent mode");
    PlaneWaveMode m;
    m.k = k;
    m.omega = omega;
    m.zeta = zeta >= 0 ? 1 : -1;
    m.kz = m.zeta * std::sqrt(std::max(q, 0.0));
    m.pol = pol;
    return m;
}

bool on_shell(const PlaneWaveMode& m, double rel_tol)
{
    const double lhs = m.k[0] * m.k[0] + m.k[1] * m.k[1] + m.kz * m.kz;
    const double rhs = m.omega * m.omega;
    return m.omega > 0.0 && std::abs(lhs - rhs) <= rel_tol * rhs;
}

PolarizationBasis polarization_basis(const Vec3& K)
{
    const double n = norm(K);
    if (!(n > 0.0))
        throw ParameterError("polarization basis needs a non-zero wavevector");
    const Vec3 kh = scale(K, 1.0 / n);
    // K^ x z = (ky, -kx, 0)
    const Vec3 c{kh[1], -kh[0], 0.0};
    const double cn = norm(c);
    PolarizationBasis b;
    if (cn < 1e-14)
        b.te = {1.0, 0.0, 0.0};
    else
        b.te = scale(c, 1.0 / cn);
    b.tm = cross(b.te, kh);
    return b;
}

double w_tilde_vectors(const Vec3& K1, const Vec3& e1, const Vec3& K2, const Vec3& e2)
{
    const double n1 = norm(K1);
    const double n2 = norm(K2);
    const double first = (K1[2] * n2 / n1 + K2[2] * n1 / n2) * dot(e1, e2);
    const double r2 = dot(K2, e1) / n2 * e2[2];
    const double r1 = dot(K1, e2) / n1 * e1[2];
    return first - r2 - r1;
}

double w_tilde(const PlaneWaveMode& m1, const PlaneWaveMode& m2)
{
    for (const auto* m : {&m1, &m2}) {
        if (m->pol != Polarization::TE && m->pol != Polarization::TM)
            throw ParameterError("w_tilde takes linear polarizations; use the circular variant");
        if (!on_shell(*m, 1e-10))
            throw ParameterError("w_tilde: off-shell mode");
    }
    const Vec3 K1 = m1.wavevector();
    const Vec3 K2 = m2.wavevector();
    const auto b1 = polarization_basis(K1);
    const auto b2 = polarization_basis(K2);
    const Vec3& e1 = m1.pol == Polarization::TE ? b1.te : b1.tm;
    const Vec3& e2 = m2.pol == Polarization::TE ? b2.te : b2.tm;
    return w_tilde_vectors(K1, e1, K2, e2);
}

LinearAmplitudes linear_amplitudes(const Vec3& K1, const Vec3& K2)
{
    const auto b1 = polarization_basis(K1);
    const auto b2 = polarization_basis(K2);
    const Vec3* e1[2] = {&b1.te, &b1.tm};
    const Vec3* e2[2] = {&b2.te, &b2.tm};
    LinearAmplitudes a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            a.w[i][j] = w_tilde_vectors(K1, *e1[i], K2, *e2[j]);
    return a;
}

namespace {

// Components of a polarization label along (e_TE, e_TM).
std::pair<std::complex<double>, std::complex<double>> components(Polarization p)
{
    const double s = 1.0 / std::sqrt(2.0);
    switch (p) {
    case Polarization::TE: return {1.0, 0.0};
    case Polarization::TM: return {0.0, 1.0};
    case Polarization::R: return {s, std::complex<double>(0.0, s)};
    case Polarization::L: return {s, std::complex<double>(0.0, -s)};
    }
    return {0.0, 0.0};
}

}  // namespace

std::complex<double> circular_amplitude(const LinearAmplitudes& a, Polarization p1,
                                        Polarization p2)
{
    const auto c1 = components(p1);
    const auto c2 = components(p2);
    const std::complex<double> u1[2] = {c1.first, c1.second};
    const std::complex<double> u2[2] = {c2.first, c2.second};
    std::complex<double> w = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            w += u1[i] * u2[j] * a.w[i][j];
    return w;
}

double w_tilde_squared_circular(const PlaneWaveMode& m1, const PlaneWaveMode& m2,
                                Polarization pol1, Polarization pol2)
{
    if (!on_shell(m1, 1e-10) || !on_shell(m2, 1e-10))
        throw ParameterError("w_tilde_squared_circular: off-shell mode");
    const auto amps = linear_amplitudes(m1.wavevector(), m2.wavevector());
    return std::norm(circular_amplitude(amps, pol1, pol2));
}

}  // namespace stdce
