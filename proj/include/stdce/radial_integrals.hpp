// SPDX-License-Identifier: Apache-2.0
//
// Finite-disk radial integrals of Bessel products entering the spinning
// angular-momentum spectrum. With s = (-1)^(m - ell):
//   H(+/-) = -s int_0^R y J_{m+/-1}(kappa y) J_{m+/-1-ell}(kappa' y) dy
//   H(0)   =  s int_0^R y J_m(kappa y)      J_{m-ell}(kappa' y)     dy
//   I(+/-) = -s int_0^R y J_{m+/-1}(kappa y) J_{m-/+1-ell}(kappa' y) dy
//   J(+/-) = -s int_0^R   J_m(kappa y)      J_{m-/+1-ell}(kappa' y) dy
//   K(+/-) =  s int_0^R   J_{m+/-1}(kappa y) J_{m-ell}(kappa' y)     dy
#pragma once

#include <vector>

namespace stdce {

struct RadialIntegralSet {
    int m = 0;
    int ell = 0;
    double kappa = 0.0;
    double kappa_prime = 0.0;
    double R = 0.0;

    double H_plus = 0.0, H_minus = 0.0, H0 = 0.0;
    double I_plus = 0.0, I_minus = 0.0;
    double J_plus = 0.0, J_minus = 0.0;
    double K_plus = 0.0, K_minus = 0.0;

    double error_estimate = 0.0;  // max |refined - coarse| over the nine
    int panels = 0;
};

/// Composite 16-point Gauss-Legendre with panels no longer than a quarter
/// period of the fastest oscillation (kappa + kappa'), doubled until the
/// coarse/refined difference is below rel_tol. Throws NumericalError with
/// panel diagnostics otherwise.
RadialIntegralSet radial_integrals(int m, int ell, double kappa, double kappa_prime, double R,
                                   double rel_tol = 1e-9);

/// int_0^R y J_m(kappa y) J_m(kappa' y) dy in closed form; the equal-kappa
/// form is used when |kappa - kappa'| < 1e-8 max(kappa, kappa').
double lommel_closed(int m, double kappa, double kappa_prime, double R);

struct WeberSchafheitlinProbe {
    int m = 0;
    double kappa = 0.0;
    double kappa_off = 0.0;
    std::vector<double> radii;
    std::vector<double> diagonal;      // int_0^R y J_m(kappa y)^2 dy
    std::vector<double> off_diagonal;  // int_0^R y J_m(kappa y) J_m(kappa_off y) dy
    double slope_limit = 0.0;          // 1/(pi kappa): diagonal grows like R/(pi kappa)
};

/// Large-R behaviour of the q = 1 integrals: the diagonal grows linearly
/// (concentrating onto kappa = kappa') while off-diagonal values stay bounded.
WeberSchafheitlinProbe weber_schafheitlin_probe(int m, double kappa, double kappa_off,
                                                const std::vector<double>& radii = {50.0, 100.0,
                                                                                   200.0});

}  // namespace stdce
