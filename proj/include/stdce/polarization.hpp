// SPDX-License-Identifier: Apache-2.0
//
// Plane-wave photon modes and the two-photon coupling W~ of an oscillating
// atom. Internal units: c = Omega = 1.
#pragma once

#include <complex>
#include <utility>

#include "stdce/core_params.hpp"

namespace stdce {

enum class Polarization { TE, TM, R, L };

const char* to_string(Polarization p);
Polarization polarization_from_string(const std::string& s);

struct PlaneWaveMode {
    Vec2 k{0.0, 0.0};  // in-plane wavevector
    double kz = 0.0;
    double omega = 0.0;
    int zeta = 1;      // sign of kz
    Polarization pol = Polarization::TE;

    Vec3 wavevector() const { return {k[0], k[1], kz}; }
};

/// Builds an on-shell mode from frequency, in-plane momentum and direction
/// sign. Throws ParameterError if |k| > omega.
PlaneWaveMode make_mode(const Vec2& k, double omega, int zeta, Polarization pol);

struct PolarizationBasis {
    Vec3 te;
    Vec3 tm;
};

/// e_TE = (K x z)/|K x z| (x for K parallel to z), e_TM = e_TE x K^.
PolarizationBasis polarization_basis(const Vec3& K);

/// W~ for explicit wavevectors and real polarization vectors.
double w_tilde_vectors(const Vec3& K1, const Vec3& e1, const Vec3& K2, const Vec3& e2);

/// W~ for two linear-polarization modes. Throws ParameterError for
/// off-shell modes or circular polarizations.
double w_tilde(const PlaneWaveMode& m1, const PlaneWaveMode& m2);

/// The four linear amplitudes W[a][b], a,b in {TE, TM}.
struct LinearAmplitudes {
    double w[2][2];
};
LinearAmplitudes linear_amplitudes(const Vec3& K1, const Vec3& K2);

/// Circular amplitude from the linear ones, e_R = (e_TE + i e_TM)/sqrt 2,
/// e_L = (e_TE - i e_TM)/sqrt 2, applied to each photon.
std::complex<double> circular_amplitude(const LinearAmplitudes& a, Polarization p1,
                                        Polarization p2);

/// |W~|^2 with both photons in circular polarization.
double w_tilde_squared_circular(const PlaneWaveMode& m1, const PlaneWaveMode& m2,
                                Polarization pol1, Polarization pol2);

bool on_shell(const PlaneWaveMode& m, double rel_tol = 1e-12);

}  // namespace stdce
