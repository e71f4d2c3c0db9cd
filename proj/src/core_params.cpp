// SPDX-License-Identifier: Apache-2.0
#include "stdce/core_params.hpp"

#include <cmath>
#include <sstream>

#include "stdce/errors.hpp"

namespace stdce {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << what << " must be positive and finite (got " << v << ")";
        throw ParameterError(os.str());
    }
}

void require_positive(int v, const char* what)
{
    if (v <= 0) {
        std::ostringstream os;
        os << what << " must be a positive integer (got " << v << ")";
        throw ParameterError(os.str());
    }
}

}  // namespace

void validate(const ModulationSpec& spec)
{
    require_positive(spec.omega_mod, "modulation frequency");
    if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude))
        throw ParameterError("modulation amplitude must be non-negative");
    if (const auto* kick = std::get_if<LinearKick>(&spec.phase)) {
        if (!std::isfinite(kick->beta[0]) || !std::isfinite(kick->beta[1]))
            throw ParameterError("kick must be finite");
    }
}

void validate(const ArrayGeometry& geom)
{
    std::visit(
        [](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, CubicLattice>) {
                require_positive(g.nx, "Nx");
                require_positive(g.ny, "Ny");
                require_positive(g.nz, "Nz");
                require_positive(g.spacing, "lattice spacing");
            }
            else if constexpr (std::is_same_v<T, PeriodicMonolayer>) {
                require_positive(g.density, "surface density");
            }
            else {
                require_positive(g.radius, "disk radius");
                require_positive(g.density, "surface density");
                require_positive(g.nz, "Nz");
                require_positive(g.spacing, "disk spacing");
            }
        },
        geom);
}

void validate(const AtomicSpecies& atom)
{
    require_positive(atom.alpha0, "polarizability");
}

DimensionlessContext to_dimensionless(const ModulationSpec& spec, const ArrayGeometry& geom)
{
    validate(spec);
    validate(geom);

    DimensionlessContext ctx;
    ctx.omega_mod_si = spec.omega_mod;
    ctx.length_unit_si = kSpeedOfLight / spec.omega_mod;
    const double inv_len = 1.0 / ctx.length_unit_si;
    ctx.amplitude = spec.amplitude * inv_len;

    if (ctx.amplitude > kSmallAmplitudeLimit) {
        ctx.small_amplitude = false;
        std::ostringstream os;
        os << "Omega*Delta/c = " << ctx.amplitude
           << " is not small; the small-amplitude expansion is questionable";
        ctx.warnings.push_back(os.str());
    }

    if (const auto* kick = std::get_if<LinearKick>(&spec.phase))
        ctx.kick = Vec2{kick->beta[0] * ctx.length_unit_si, kick->beta[1] * ctx.length_unit_si};
    else if (const auto* spin = std::get_if<SpinningCharge>(&spec.phase))
        ctx.ell = spin->ell;

    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, CubicLattice>) {
                ctx.counts = std::array<int, 3>{g.nx, g.ny, g.nz};
                ctx.spacing = g.spacing * inv_len;
                ctx.extent = Vec3{g.length_x() * inv_len, g.length_y() * inv_len,
                                  g.length_z() * inv_len};
            }
            else if constexpr (std::is_same_v<T, PeriodicMonolayer>) {
                ctx.density = g.density * ctx.length_unit_si * ctx.length_unit_si;
            }
            else {
                ctx.radius = g.radius * inv_len;
                ctx.density = g.density * ctx.length_unit_si * ctx.length_unit_si;
                ctx.spacing = g.spacing * inv_len;
                ctx.counts = std::array<int, 3>{0, 0, g.nz};
            }
        },
        geom);
    return ctx;
}

ModulationSpec modulation_from_dimensionless(const DimensionlessContext& ctx)
{
    ModulationSpec spec;
    spec.omega_mod = ctx.omega_mod_si;
    spec.amplitude = ctx.length_to_si(ctx.amplitude);
    if (ctx.kick)
        spec.phase = LinearKick{{ctx.wavenumber_to_si((*ctx.kick)[0]),
                                 ctx.wavenumber_to_si((*ctx.kick)[1])}};
    else if (ctx.ell)
        spec.phase = SpinningCharge{*ctx.ell};
    return spec;
}

double norm_r0(const ModulationSpec& spec, const ArrayGeometry& geom, const AtomicSpecies& atom)
{
    validate(spec);
    validate(atom);
    const auto* lattice = std::get_if<CubicLattice>(&geom);
    if (!lattice)
        throw ParameterError("r0 normalization requires a cubic lattice geometry");
    validate(geom);

    const double c = kSpeedOfLight;
    const double n_total = static_cast<double>(lattice->nx) * lattice->ny * lattice->nz;
    const double two_pi = 2.0 * kPi;
    return atom.alpha0 * atom.alpha0 * std::pow(spec.omega_mod, 3) * spec.amplitude *
           spec.amplitude / (16.0 * std::pow(two_pi, 3) * c * c * n_total * n_total);
}

double norm_gamma0(const ModulationSpec& spec, double density, const AtomicSpecies& atom,
                   double area)
{
    validate(spec);
    validate(atom);
    require_positive(density, "surface density");
    require_positive(area, "area");

    const double c = kSpeedOfLight;
    const double two_pi = 2.0 * kPi;
    const double alpha_density = atom.alpha0 * density;
    const double omega_over_c = spec.omega_mod / c;
    // Omega^7/c^6 = Omega (Omega/c)^6; grouping keeps the intermediates in range.
    return area * alpha_density * alpha_density * std::pow(omega_over_c, 6) * spec.omega_mod *
           spec.amplitude * spec.amplitude / (16.0 * std::pow(two_pi, 3));
}

}  // namespace stdce
