// SPDX-License-Identifier: Apache-2.0
#include "stdce/array_factors.hpp"

#include <cmath>
#include <sstream>

#include "stdce/errors.hpp"
#include "stdce/kernels.hpp"

namespace stdce {

double dirichlet_squared(double dk, int n, double length)
{
    if (n <= 1)
        return 1.0;
    const double x = dk * length / (2.0 * n);
    // sin^2(N x)/sin^2(x) is pi-periodic in x.
    const double eps = std::remainder(x, kPi);
    const double nn = static_cast<double>(n) * n;
    if (std::abs(eps) < 1e-6)
        return nn * (1.0 - (nn - 1.0) * eps * eps / 3.0);
    const double r = std::sin(n * eps) / std::sin(eps);
    return r * r;
}

double af1_closed(const FormFactorArgs& args)
{
    const auto& g = args.geometry;
    return dirichlet_squared(args.dk_inplane[0], g.nx, g.length_x()) *
           dirichlet_squared(args.dk_inplane[1], g.ny, g.length_y());
}

double af2_closed(double dk_z, int nz, double lz)
{
    if (nz < 1)
        throw ParameterError("Nz must be >= 1");
    return dirichlet_squared(dk_z, nz, lz);
}

double af_discrete_oracle(const Vec3& dk, const CubicLattice& geometry)
{
    return af_discrete_oracle_shifted(dk, geometry, Vec3{0.0, 0.0, 0.0});
}

double af_discrete_oracle_shifted(const Vec3& dk, const CubicLattice& geometry,
                                  const Vec3& origin)
{
    validate(ArrayGeometry{geometry});
    const long long n = static_cast<long long>(geometry.nx) * geometry.ny * geometry.nz;
    if (n > kOracleMaxAtoms) {
        std::ostringstream os;
        os << "atom-sum oracle limited to " << kOracleMaxAtoms << " atoms (got " << n << ")";
        throw ResourceError(os.str());
    }
    return serial::af_sum(dk, geometry, origin);
}

ConservationReport lattice_momentum_rule(const Vec2& k1, const Vec2& k2, const Vec2& beta,
                                         double spacing, double tol)
{
    if (!(spacing > 0.0))
        throw ParameterError("lattice spacing must be positive");
    ConservationReport r;
    const double g = 2.0 * kPi / spacing;
    const double dx = k1[0] + k2[0] - beta[0];
    const double dy = k1[1] + k2[1] - beta[1];
    const double qx = std::round(dx / g);
    const double qy = std::round(dy / g);
    r.qx = static_cast<int>(qx);
    r.qy = static_cast<int>(qy);
    r.satisfied = std::abs(dx - qx * g) <= tol * std::max(1.0, g) &&
                  std::abs(dy - qy * g) <= tol * std::max(1.0, g);

    // Photon in-plane momenta obey |k1| <= omega1, |k2| <= omega2, so the total
    // beta + G must fit in the unit disk for both to radiate.
    const double bx = beta[0] + qx * g;
    const double by = beta[1] + qy * g;
    const double bmag = std::hypot(beta[0], beta[1]);
    r.propagative = r.satisfied && std::hypot(bx, by) <= 1.0;
    r.only_zero_order = g > 1.0 + bmag;

    if (!r.satisfied)
        r.note = "k1 + k2 - beta is not a reciprocal lattice vector";
    else if (r.qx == 0 && r.qy == 0)
        r.note = r.propagative ? "q = 0 order, propagative" : "q = 0 order, kick beyond light cone";
    else
        r.note = r.propagative ? "diffraction order q != 0, propagative"
                               : "diffraction order q != 0, evanescent";
    return r;
}

}  // namespace stdce
