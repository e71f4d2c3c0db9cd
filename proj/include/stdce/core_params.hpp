// SPDX-License-Identifier: Apache-2.0
//
// Physical parameters of a spatio-temporally modulated atomic array and the
// conversion to the internal unit system (c = 1, Omega = 1, lengths in c/Omega).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stdce {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact
inline constexpr double kPi = 3.14159265358979323846;

/// Above this value of Omega*Delta/c the small-amplitude expansion is
/// flagged (advisory only).
inline constexpr double kSmallAmplitudeLimit = 0.1;

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

struct NoPhase {};

/// Travelling-wave synthetic phase beta . r, beta in rad/m.
struct LinearKick {
    Vec2 beta{0.0, 0.0};
};

/// Spinning synthetic phase ell * phi.
struct SpinningCharge {
    int ell = 0;
};

using SyntheticPhase = std::variant<NoPhase, LinearKick, SpinningCharge>;

struct ModulationSpec {
    double omega_mod = 0.0;  // rad/s
    double amplitude = 0.0;  // m
    SyntheticPhase phase = NoPhase{};
};

struct AtomicSpecies {
    double alpha0 = 0.0;  // m^3, ground-state static polarizability
};

/// Finite Nx x Ny x Nz lattice with spacing d; L_i = d N_i.
struct CubicLattice {
    int nx = 1;
    int ny = 1;
    int nz = 1;
    double spacing = 0.0;  // m

    double length_x() const { return spacing * nx; }
    double length_y() const { return spacing * ny; }
    double length_z() const { return spacing * nz; }
};

/// Infinite in-plane array in the continuum limit.
struct PeriodicMonolayer {
    double density = 0.0;  // atoms / m^2
};

/// Stack of Nz disks of radius R along the spinning axis.
struct CylindricalStack {
    double radius = 0.0;   // m
    double density = 0.0;  // atoms / m^2
    int nz = 1;
    double spacing = 0.0;  // m, inter-disk distance
};

using ArrayGeometry = std::variant<CubicLattice, PeriodicMonolayer, CylindricalStack>;

/// Everything expressed in c = Omega = 1 units. SI scales are kept so
/// results can be mapped back.
struct DimensionlessContext {
    double omega_mod_si = 0.0;   // rad/s
    double length_unit_si = 0.0; // c / Omega in m
    double amplitude = 0.0;      // Omega Delta / c

    std::optional<Vec2> kick;    // c beta / Omega
    std::optional<int> ell;

    // Geometry, in units of c/Omega (density in Omega^2/c^2).
    std::optional<std::array<int, 3>> counts;
    std::optional<Vec3> extent;
    double spacing = 0.0;
    double radius = 0.0;
    double density = 0.0;

    bool small_amplitude = true;
    std::vector<std::string> warnings;

    double frequency_to_si(double u) const { return u * omega_mod_si; }
    double length_to_si(double x) const { return x * length_unit_si; }
    double wavenumber_to_si(double k) const { return k / length_unit_si; }
    double density_to_si(double n) const { return n / (length_unit_si * length_unit_si); }
};

/// Throws ParameterError on non-positive frequency, negative amplitude or
/// non-positive extents. Regime violations become warnings instead.
DimensionlessContext to_dimensionless(const ModulationSpec& spec, const ArrayGeometry& geom);

/// Inverse of to_dimensionless for the modulation part.
ModulationSpec modulation_from_dimensionless(const DimensionlessContext& ctx);

/// Finite-array lobe normalization
/// r0 = alpha0^2 Omega^3 Delta^2 / [16 (2pi)^3 c^2 Nx^2 Ny^2 Nz^2], in 1/s.
double norm_r0(const ModulationSpec& spec, const ArrayGeometry& geom, const AtomicSpecies& atom);

/// Monolayer rate normalization
/// Gamma0 = A nS^2 alpha0^2 Omega^7 Delta^2 / [16 (2pi)^3 c^6], in 1/s.
double norm_gamma0(const ModulationSpec& spec, double density, const AtomicSpecies& atom,
                   double area);

void validate(const ModulationSpec& spec);
void validate(const ArrayGeometry& geom);
void validate(const AtomicSpecies& atom);

}  // namespace stdce
