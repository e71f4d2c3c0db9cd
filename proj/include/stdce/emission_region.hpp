// SPDX-License-Identifier: Apache-2.0
//
// Geometry of the far-field emission set of one photon of the pair under a
// momentum kick: |k1| <= omega and |beta - k1| <= 1 - omega.
#pragma once

#include <string>
#include <vector>

namespace stdce {

enum class PhotonRole { High, Low };

const char* to_string(PhotonRole r);

/// Allowed range of sin(theta) along one azimuth (kick along phi = 0).
struct RegionSlice {
    double phi = 0.0;
    bool allowed = false;
    double s_lo = 0.0;
    double s_hi = 0.0;
};

struct EmissionRegion {
    double omega = 0.0;
    double beta = 0.0;
    PhotonRole role = PhotonRole::High;
    std::vector<RegionSlice> slices;

    bool empty = true;
    bool contains_normal = false;  // theta = 0 allowed
    bool touches_grazing = false;  // some theta = 90 deg direction allowed
    bool fully_allowed = false;    // every direction allowed
    bool island = false;           // non-empty, away from normal and grazing
};

/// Samples the region boundary on n_phi azimuths in [0, pi] (both ends
/// included; the region is symmetric about the kick axis).
EmissionRegion emission_region(double omega, double beta, PhotonRole role, int n_phi = 721);

enum class RegionTransition {
    NormalExcluded,   // normal direction leaves the allowed set
    GrazingContact,   // allowed set reaches grazing emission
    GrazingLost,
    ForbiddenOnset,   // a forbidden zone appears in a fully allowed map
    Collapse          // allowed set shrinks to nothing
};

const char* to_string(RegionTransition t);

struct CriticalKick {
    RegionTransition kind;
    double beta;
};

/// Kicks in [0, beta_max] where the region topology changes, located by
/// scanning in steps of 0.01 and bisecting each predicate flip to tol.
std::vector<CriticalKick> critical_kicks(double omega, PhotonRole role, double beta_max = 1.2,
                                         double tol = 1e-10, int n_phi = 721);

}  // namespace stdce
