// SPDX-License-Identifier: Apache-2.0
//
// Non-paraxial vector-Bessel modes with definite total angular momentum m.
#pragma once

#include <array>
#include <complex>

namespace stdce {

struct BesselMode {
    double k = 0.0;   // transverse momentum
    double kz = 0.0;  // axial momentum
    int eta = 1;      // transverse-spin sign
    int m = 0;        // total angular momentum

    double omega() const;
};

/// Mode normalization 1 / (sqrt(2) 2 pi).
double bessel_mode_norm();

/// (E_rho, E_phi, E_z) at cylindrical (rho, phi, z):
///   E_rho = i N e^{i kz z + i m phi} [a J_{m-1}(k rho) - b J_{m+1}(k rho)]
///   E_phi =  -N e^{i kz z + i m phi} [a J_{m-1}(k rho) + b J_{m+1}(k rho)]
///   E_z   =   N e^{i kz z + i m phi} (k/K) J_m(k rho)
/// with a = (kz + eta K)/2K, b = (kz - eta K)/2K, K = sqrt(k^2 + kz^2).
std::array<std::complex<double>, 3> bessel_mode_field(const BesselMode& mode, double rho,
                                                      double phi, double z);

/// Cartesian (E_x, E_y, E_z) of the same field.
std::array<std::complex<double>, 3> bessel_mode_field_cartesian(const BesselMode& mode,
                                                                double rho, double phi,
                                                                double z);

}  // namespace stdce
