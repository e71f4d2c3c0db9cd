// SPDX-License-Identifier: Apache-2.0
#include "stdce/bessel_mode.hpp"

#include <cmath>

#include "stdce/bessel.hpp"
#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"

namespace stdce {

double BesselMode::omega() const
{
    return std::hypot(k, kz);
}

double bessel_mode_norm()
{
    return 1.0 / (std::sqrt(2.0) * 2.0 * kPi);
}

std::array<std::complex<double>, 3> bessel_mode_field(const BesselMode& mode, double rho,
                                                      double phi, double z)
{
    const double K = mode.omega();
    if (!(K > 0.0))
        throw ParameterError("Bessel mode needs a positive frequency");
    if (mode.k < 0.0)
        throw ParameterError("transverse momentum must be non-negative");
    if (mode.eta != 1 && mode.eta != -1)
        throw ParameterError("eta must be +1 or -1");
    const double n = bessel_mode_norm();
    const double a = (mode.kz + mode.eta * K) / (2.0 * K);
    const double b = (mode.kz - mode.eta * K) / (2.0 * K);
    const double x = mode.k * rho;
    const double jm1 = bessel_j(mode.m - 1, x);
    const double jp1 = bessel_j(mode.m + 1, x);
    const double j0 = bessel_j(mode.m, x);
    const std::complex<double> ph = std::polar(n, mode.kz * z + mode.m * phi);
    const std::complex<double> i(0.0, 1.0);
    return {i * ph * (a * jm1 - b * jp1), -ph * (a * jm1 + b * jp1), ph * (mode.k / K) * j0};
}

std::array<std::complex<double>, 3> bessel_mode_field_cartesian(const BesselMode& mode,
                                                                double rho, double phi,
                                                                double z)
{
    const auto e = bessel_mode_field(mode, rho, phi, z);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c * e[0] - s * e[1], s * e[0] + c * e[1], e[2]};
}

}  // namespace stdce
