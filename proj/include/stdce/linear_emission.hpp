// SPDX-License-Identifier: Apache-2.0
//
// Pair emission from a planar array driven with a linear synthetic phase
// (momentum kick beta). Frequencies in units of Omega, momenta in Omega/c.
#pragma once

#include <vector>

#include "stdce/core_params.hpp"
#include "stdce/polarization.hpp"

namespace stdce {

struct PartnerKinematics {
    Vec2 k2{0.0, 0.0};
    double omega2 = 0.0;
    double k2z_abs = 0.0;
    bool photon1_evanescent = false;  // |k1| > omega1
    bool evanescent = false;          // either photon cannot radiate
    std::vector<int> allowed_zeta2;   // {+1, -1} when propagative
};

/// Partner of a photon (k1, omega1) under in-plane conservation k1 + k2 = beta
/// and omega1 + omega2 = 1. Throws ParameterError unless 0 < omega1 < 1.
PartnerKinematics partner(const Vec2& k1, double omega1, const Vec2& beta);

struct LinearOptions {
    // Relative tolerance of the frequency integral; the azimuthal integral
    // runs at tolerance / 10. The polar integral uses fixed Gauss-Legendre
    // panels after endpoint-regularizing substitutions (about 1e-12).
    double tolerance = 1e-8;
    bool exclude_cross = false;   // drop partner polarization != lambda (TE/TM only)
    int nz = 1;                   // layers; AF2 = 1 for nz = 1
    double spacing = 0.0;         // layer spacing (c/Omega), needed when nz > 1
};

/// Spectral density f of photon 1 with polar angle theta, azimuth phi:
/// f = omega1 (1 - omega1)^2 / |k2z| * sum_{zeta2, lambda2} AF2 W~^2.
/// Zero on the forbidden set. Circular lambda1 sums |W~|^2 over the
/// partner's linear basis.
double density_f(double theta, double phi, double omega1, const Vec2& beta, Polarization lambda1,
                 int zeta1, const LinearOptions& opt = {});

/// Same, from an in-plane momentum k1 (|k1| <= omega1).
double density_f_k(const Vec2& k1, double omega1, const Vec2& beta, Polarization lambda1,
                   int zeta1, const LinearOptions& opt = {});

/// Spectral rate dGamma_lambda/domega in Gamma0/Omega units: photon of
/// polarization lambda at frequency omega, all directions and both zeta,
/// partner summed. Depends on |beta| only.
double spectral_rate(double omega, double beta, Polarization lambda, const LinearOptions& opt = {});

/// Azimuthal slice of the spectral rate: the integral over sin(theta) and
/// both zeta1 at fixed azimuth phi of photon 1, kick along x. The spectral
/// rate is 2 int_0^pi slice_rate dphi.
double slice_rate(double omega, double beta, double phi, Polarization lambda,
                  const LinearOptions& opt = {});

struct RateResult {
    double value = 0.0;
    double error = 0.0;
};

/// Pair rate Gamma_lambda(beta) / Gamma0 = (1/2) int_0^1 dGamma_lambda/domega.
/// Each pair holds two photons; integrating the one-photon spectrum counts
/// every pair twice. Zero for beta >= 1.
RateResult total_rate(double beta, Polarization lambda, const LinearOptions& opt = {});

/// Gamma_TE + Gamma_TM.
RateResult total_rate_sum(double beta, const LinearOptions& opt = {});

/// Lobe of a finite cubic array in the yz plane: partner fixed along +z
/// (k2 = 0, omega2 = 1 - omega1), kick along y. Returns r/r0 for each theta
/// (measured from +z towards +y), partner polarization summed:
/// u v sum_lambda2 W~^2 AF1 AF2 / (Nx Ny Nz)^2. Geometry in c/Omega units.
std::vector<double> lobes_finite_array(double beta_y, double omega1, Polarization lambda1,
                                       const CubicLattice& geometry,
                                       const std::vector<double>& thetas);

struct JointPairDistribution {
    Vec2 beta{0.0, 0.0};
    std::vector<double> omega;       // photon-1 frequencies
    std::vector<double> kx;
    std::vector<double> ky;
    std::vector<double> density;     // [iw][ix][iy], per unit omega and d^2k
    double normalization = 0.0;      // int dGamma/domega (both polarizations)
    double value(std::size_t iw, std::size_t ix, std::size_t iy) const
    {
        return density[(iw * kx.size() + ix) * ky.size() + iy];
    }
};

/// Density over (omega, k1) of photon 1 (partner fixed by conservation),
/// summed over polarizations and both directions, normalized so that its
/// integral over omega and k1 is 1. Throws ParameterError for |beta| >= 1.
JointPairDistribution joint_pair_distribution(const Vec2& beta, const std::vector<double>& omega,
                                              const std::vector<double>& kx,
                                              const std::vector<double>& ky,
                                              const LinearOptions& opt = {});

/// Frequencies where the emission-region topology changes for kick beta;
/// the omega integrand has kinks there.
std::vector<double> frequency_breakpoints(double beta);

}  // namespace stdce
