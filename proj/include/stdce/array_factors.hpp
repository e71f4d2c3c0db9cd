// SPDX-License-Identifier: Apache-2.0
//
// Coherent form factors |sum_j exp(i dk . R_j)|^2 of finite cubic arrays,
// closed forms and the brute-force atom sum.
#pragma once

#include <string>

#include "stdce/core_params.hpp"

namespace stdce {

struct FormFactorArgs {
    Vec2 dk_inplane{0.0, 0.0};  // k1 + k2 - beta
    double dk_z = 0.0;          // k1z + k2z
    CubicLattice geometry;
};

/// sin^2(N x) / sin^2(x) with x = dk L / (2N); equals N^2 at the removable
/// singularities x = n pi.
double dirichlet_squared(double dk, int n, double length);

double af1_closed(const FormFactorArgs& args);
double af2_closed(double dk_z, int nz, double lz);

/// Atom-count limit for the brute-force sum.
inline constexpr long long kOracleMaxAtoms = 1000000;

/// |sum_j exp(i dk . R_j)|^2 with R_j = d (mx, my, mz), 1 <= m_i <= N_i,
/// summed with a fixed pairwise tree. Throws ResourceError above
/// kOracleMaxAtoms.
double af_discrete_oracle(const Vec3& dk, const CubicLattice& geometry);

/// Same sum with an arbitrary lattice origin (the modulus is origin-free).
double af_discrete_oracle_shifted(const Vec3& dk, const CubicLattice& geometry,
                                  const Vec3& origin);

struct ConservationReport {
    bool satisfied = false;      // k1 + k2 - beta on the reciprocal lattice
    int qx = 0;                  // diffraction order along x
    int qy = 0;                  // diffraction order along y
    bool propagative = false;    // the matched order can radiate
    bool only_zero_order = false;  // 2 pi / d exceeds every photon wavenumber
    std::string note;
};

/// In-plane momentum bookkeeping for a periodic monolayer of spacing d:
/// k1 + k2 = beta + G, G = (2 pi / d)(qx, qy). Momenta in Omega/c units.
ConservationReport lattice_momentum_rule(const Vec2& k1, const Vec2& k2, const Vec2& beta,
                                         double spacing, double tol = 1e-9);

}  // namespace stdce
