// SPDX-License-Identifier: Apache-2.0
//
// Integer-order Bessel functions of the first kind, J_n(x), for real x.
#pragma once

#include <vector>

namespace stdce {

/// J_n(x) for any integer n and real x; |error| < 1e-13 for |x| <= 1e4,
/// |n| <= 60.
double bessel_j(int n, double x);

/// J_0(x) ... J_nmax(x) in one backward (Miller) recurrence. out must hold
/// nmax + 1 values.
void bessel_j_orders(int nmax, double x, double* out);
std::vector<double> bessel_j_orders(int nmax, double x);

/// J_n(x) for n in [nmin, nmax] (negative orders by reflection); out holds
/// nmax - nmin + 1 values. scratch is resized as needed.
void bessel_j_range(int nmin, int nmax, double x, double* out, std::vector<double>& scratch);

/// dJ_n/dx = (J_{n-1} - J_{n+1}) / 2.
double bessel_j_derivative(int n, double x);

}  // namespace stdce
