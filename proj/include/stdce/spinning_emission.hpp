// SPDX-License-Identifier: Apache-2.0
//
// Pair emission from a disk of atoms driven with a spinning synthetic phase
// ell * phi. Dimensionless variables: u = omega/Omega, kappa = c k/Omega,
// R = Omega R/c.
#pragma once

#include <vector>

#include "stdce/radial_integrals.hpp"

namespace stdce {

struct SpinningKinematics {
    double u = 0.5;
    double kappa = 0.0;
    double kappa_prime = 0.0;
    double kappa_z = 0.0;        // zeta sqrt(u^2 - kappa^2)
    double kappa_z_prime = 0.0;  // zeta' sqrt((1-u)^2 - kappa'^2)
    int eta = 1;
    int eta_prime = 1;
    int m = 0;
    int ell = 0;
    double R = 5.0;
};

/// Throws ParameterError outside the propagative domain or for u not in (0,1).
SpinningKinematics make_spinning_kinematics(double u, double kappa, double kappa_prime, int zeta,
                                            int zeta_prime, int eta, int eta_prime, int m,
                                            int ell, double R);

struct TTerms {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
    double sum() const { return a + b + c + d + e; }
};

/// The five terms of the pair amplitude in the nine-integral basis. With
/// A = kz + eta u, B = kz - eta u, A' = kz' + eta' v, B' = kz' - eta' v,
/// v = 1 - u and G = kz v/u + kz' u/v:
///   t_a = [G A B' + k'^2 A/(2v) + k^2 B'/(2u)] H(-)
///   t_b = [G A' B + k^2 A'/(2u) + k'^2 B/(2v)] H(+)
///   t_c = -2 (kz + kz') k k' H(0)
///   t_d = -[k'^2 A/(2v) + k^2 A'/(2u)] I(-) - [k'^2 B/(2v) + k^2 B'/(2u)] I(+)
///   t_e = m k A'/u J(-) + m k B'/u J(+) + (ell-m) k' A/v K(-) + (ell-m) k' B/v K(+)
/// The sum equals 2 u v / N^2 times the disk integral of the two-photon
/// coupling built from the mode fields (N = mode normalization).
TTerms t_terms(const SpinningKinematics& kin, const RadialIntegralSet& ints);

/// Alternative t-term brackets without the field-derived corrections. Kept for
/// comparison only: it is not symmetric under photon exchange.
TTerms t_terms_printed(const SpinningKinematics& kin, const RadialIntegralSet& ints);

struct SpinningOptions {
    double R = 5.0;
    int n_theta = 0;   // 0: ceil(3R) + 20 polar nodes per photon
    int n_radial = 0;  // 0: ceil(2R) + 40 radial nodes
    int nz = 1;        // layers (AF2 = 1 for nz = 1)
    double spacing = 0.0;

    int theta_nodes() const;
    int radial_nodes() const;
};

/// f_ell(u, m) = int dkappa dkappa' kappa kappa'/(|kz||kz'|)
///               sum_{zeta zeta' eta eta'} (t_a + ... + t_e)^2,
/// evaluated with kappa = u sin(theta), kappa' = (1-u) sin(theta').
double f_ell_m(double u, int m, int ell, const SpinningOptions& opt = {});

/// f_ell(u, m) for m in [m_lo, m_hi], sharing Bessel tables across m.
std::vector<double> f_ell_m_window(double u, int m_lo, int m_hi, int ell,
                                   const SpinningOptions& opt = {});

struct SpectralWeight {
    double u = 0.0;
    int m_lo = 0;
    int m_hi = 0;
    std::vector<double> per_m;   // f_ell(u, m), m = m_lo ... m_hi
    double sum = 0.0;            // sum_m f_ell(u, m)
    double density = 0.0;        // dGamma_ell/domega in Gamma0/Omega units, A = pi R^2
    double tail_fraction = 0.0;  // outermost two shells on each side / sum
    bool converged = false;
};

inline constexpr double kTailTolerance = 1e-4;

/// Window m in [min(0,ell) - m_max, max(0,ell) + m_max], widened by 4 until
/// the tail criterion holds or m_cap is reached (then converged = false).
SpectralWeight f_ell(double u, int ell, int m_max, const SpinningOptions& opt = {},
                     int m_cap = -1);

/// Default m_max for a given radius.
int default_m_max(double R, int ell);

struct SpinningRate {
    int ell = 0;
    double R = 0.0;
    double value = 0.0;      // Gamma_ell / Gamma0 with A = pi R^2 (pairs)
    std::vector<double> u;   // frequency nodes
    std::vector<double> density;
    double max_tail = 0.0;
    bool converged = true;
};

/// The n_u Gauss-Legendre nodes on (0, 1) used for the frequency integral.
std::vector<double> spinning_frequency_nodes(int n_u);

/// Gamma_ell from spectral weights evaluated on spinning_frequency_nodes(n_u).
SpinningRate spinning_rate_from_weights(int ell, double R, const std::vector<SpectralWeight>& w);

/// Gamma_ell / Gamma0 = (pi / 8 R^2) int_0^1 du sum_m f_ell(u, m) with an
/// n_u-point Gauss-Legendre rule in u.
SpinningRate total_rate_spinning(int ell, const SpinningOptions& opt = {}, int m_max = -1,
                                 int n_u = 24);

struct Af3Result {
    bool allowed = false;
    double azimuthal_weight = 0.0;  // (2 pi)^2 when allowed, 0 otherwise
};

/// Azimuthal sum of the disk form factor: non-zero only for m1 + m2 = ell.
Af3Result af3_conservation(int m1, int m2, int ell);

struct RadiusExtrapolation {
    std::vector<double> radii;
    std::vector<double> rates;
    double extrapolated = 0.0;  // fit a + b/R + c/R^2 through the points
};

/// Gamma_ell at several radii and the R -> infinity limit. The finite-disk
/// rate approaches the infinite-array value like 1/R (edge photons).
RadiusExtrapolation extrapolate_radius(int ell, const std::vector<double>& radii,
                                       const SpinningOptions& base = {}, int n_u = 24);

}  // namespace stdce
