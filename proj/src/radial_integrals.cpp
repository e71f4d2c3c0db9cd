// SPDX-License-Identifier: Apache-2.0
#include "stdce/radial_integrals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "stdce/bessel.hpp"
#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"
#include "stdce/quadrature.hpp"

namespace stdce {

namespace {

constexpr int kRulePoints = 16;
constexpr int kMaxPanels = 1 << 20;

// Raw integrals without the sign prefactors, in the order
// y P1 P2', y Q1 Q2', y Z1 Z2', y Q1 P2', y P1 Q2', Z1 P2', Z1 Q2', Q1 Z2', P1 Z2'
// where P = J_{m-1}, Q = J_{m+1}, Z = J_m for photon 1 and
// P2' = J_{m-1-ell}, Q2' = J_{m+1-ell}, Z2' = J_{m-ell} for photon 2.
using Raw = std::array<double, 9>;

Raw integrate_raw(int m, int ell, double kappa, double kappa_prime, double R, int panels,
                  const GaussLegendreRule& rule)
{
    Raw acc{};
    std::vector<double> scratch;
    double j1[3], j2[3];
    const double h = R / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h;
        Raw part{};
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double y = c + 0.5 * h * rule.nodes[i];
            const double w = rule.weights[i];
            bessel_j_range(m - 1, m + 1, kappa * y, j1, scratch);
            bessel_j_range(m - ell - 1, m - ell + 1, kappa_prime * y, j2, scratch);
            const double P1 = j1[0], Z1 = j1[1], Q1 = j1[2];
            const double P2 = j2[0], Z2 = j2[1], Q2 = j2[2];
            const double wy = w * y;
            part[0] += wy * P1 * P2;
            part[1] += wy * Q1 * Q2;
            part[2] += wy * Z1 * Z2;
            part[3] += wy * Q1 * P2;
            part[4] += wy * P1 * Q2;
            part[5] += w * Z1 * P2;
            part[6] += w * Z1 * Q2;
            part[7] += w * Q1 * Z2;
            part[8] += w * P1 * Z2;
        }
        for (int k = 0; k < 9; ++k)
            acc[k] += 0.5 * h * part[k];
    }
    return acc;
}

}  // namespace

RadialIntegralSet radial_integrals(int m, int ell, double kappa, double kappa_prime, double R,
                                   double rel_tol)
{
    if (!(kappa >= 0.0) || !(kappa_prime >= 0.0))
        throw ParameterError("radial integrals need kappa, kappa' >= 0");
    if (!(R > 0.0) || !std::isfinite(R))
        throw ParameterError("disk radius must be positive");
    if (!(rel_tol > 0.0))
        throw ParameterError("tolerance must be positive");

    RadialIntegralSet out;
    out.m = m;
    out.ell = ell;
    out.kappa = kappa;
    out.kappa_prime = kappa_prime;
    out.R = R;

    const auto rule = gauss_legendre(kRulePoints);
    const double freq = kappa + kappa_prime;
    const double quarter = freq > 0.0 ? 0.5 * kPi / freq : R;
    int panels = std::max(2, static_cast<int>(std::ceil(R / quarter)));

    Raw coarse = integrate_raw(m, ell, kappa, kappa_prime, R, panels, rule);
    Raw fine{};
    double err = 0.0;
    bool ok = false;
    while (panels <= kMaxPanels) {
        fine = integrate_raw(m, ell, kappa, kappa_prime, R, 2 * panels, rule);
        double scale = 0.0;
        for (int k = 0; k < 9; ++k)
            scale = std::max(scale, std::abs(fine[k]));
        err = 0.0;
        ok = true;
        for (int k = 0; k < 9; ++k) {
            const double d = std::abs(fine[k] - coarse[k]);
            err = std::max(err, d);
            if (d > rel_tol * std::abs(fine[k]) + 1e-15 * scale)
                ok = false;
        }
        panels *= 2;
        if (ok)
            break;
        coarse = fine;
    }
    if (!ok) {
        std::ostringstream os;
        os << "m=" << m << " ell=" << ell << " kappa=" << kappa << " kappa'=" << kappa_prime
           << " R=" << R << " panels=" << panels << " last difference=" << err;
        throw NumericalError("radial integrals did not converge", os.str());
    }

    const double s = ((m - ell) % 2 == 0) ? 1.0 : -1.0;
    out.H_minus = -s * fine[0];
    out.H_plus = -s * fine[1];
    out.H0 = s * fine[2];
    out.I_plus = -s * fine[3];
    out.I_minus = -s * fine[4];
    out.J_plus = -s * fine[5];
    out.J_minus = -s * fine[6];
    out.K_plus = s * fine[7];
    out.K_minus = s * fine[8];
    out.error_estimate = err;
    out.panels = panels;
    return out;
}

double lommel_closed(int m, double kappa, double kappa_prime, double R)
{
    if (!(kappa >= 0.0) || !(kappa_prime >= 0.0) || !(R >= 0.0))
        throw ParameterError("Lommel integral needs non-negative arguments");
    const double big = std::max(kappa, kappa_prime);
    if (std::abs(kappa - kappa_prime) < 1e-8 * big || big == 0.0) {
        const double k = 0.5 * (kappa + kappa_prime);
        const double x = k * R;
        // (R^2/2)[J_m^2 - J_{m-1} J_{m+1}] avoids the cancellation of the
        // J'^2 + (1 - m^2/x^2) J^2 form at small x.
        const double jm = bessel_j(m, x);
        return 0.5 * R * R * (jm * jm - bessel_j(m - 1, x) * bessel_j(m + 1, x));
    }
    const double a = kappa * R;
    const double b = kappa_prime * R;
    const double num = kappa_prime * bessel_j(m, a) * bessel_j_derivative(m, b) -
                       kappa * bessel_j_derivative(m, a) * bessel_j(m, b);
    return R * num / (kappa * kappa - kappa_prime * kappa_prime);
}

WeberSchafheitlinProbe weber_schafheitlin_probe(int m, double kappa, double kappa_off,
                                                const std::vector<double>& radii)
{
    if (!(kappa > 0.0) || !(kappa_off > 0.0))
        throw ParameterError("probe needs positive kappa values");
    WeberSchafheitlinProbe p;
    p.m = m;
    p.kappa = kappa;
    p.kappa_off = kappa_off;
    p.radii = radii;
    p.slope_limit = 1.0 / (kPi * kappa);
    const double s = (m % 2 == 0) ? 1.0 : -1.0;
    for (double R : radii) {
        // H(0) at ell = 0 carries the (-1)^m prefactor; undo it.
        p.diagonal.push_back(s * radial_integrals(m, 0, kappa, kappa, R).H0);
        p.off_diagonal.push_back(s * radial_integrals(m, 0, kappa, kappa_off, R).H0);
    }
    return p;
}

}  // namespace stdce
