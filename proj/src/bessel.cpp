// SPDX-License-Identifier: Apache-2.0
//
// Miller's backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, normalized
// with J_0 + 2 sum_k J_{2k} = 1.
#include "stdce/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "stdce/errors.hpp"

namespace stdce {

namespace {

constexpr double kBig = 1e250;
constexpr double kSmallArg = 1e-8;

int miller_start(int nmax, double ax)
{
    const int n0 = std::max(nmax, static_cast<int>(std::ceil(ax)));
    int start = n0 + 30 + static_cast<int>(std::sqrt(60.0 * n0)) +
                static_cast<int>(15.0 * std::cbrt(static_cast<double>(n0)));
    if (start % 2 == 1)
        ++start;
    return start;
}

// x >= 0.
void orders_nonnegative(int nmax, double x, double* out)
{
    if (x == 0.0) {
        out[0] = 1.0;
        std::fill(out + 1, out + nmax + 1, 0.0);
        return;
    }
    if (x < kSmallArg) {
        // Two terms of the power series; the third is below 1e-32 relative.
        const double h = 0.5 * x;
        double term = 1.0;  // (x/2)^n / n!
        for (int n = 0; n <= nmax; ++n) {
            if (n > 0)
                term *= h / n;
            out[n] = term * (1.0 - h * h / (n + 1));
        }
        return;
    }
    const int start = miller_start(nmax, x);
    const double two_over_x = 2.0 / x;
    double jp1 = 0.0;   // J_{k+1}
    double jk = 1e-300; // J_k at k = start
    double sum = 0.0;   // J_0 + 2 sum J_{2k}, unnormalized
    if (start <= nmax)
        out[start] = jk;
    for (int k = start; k > 0; --k) {
        const double jm1 = k * two_over_x * jk - jp1;
        jp1 = jk;
        jk = jm1;
        const int idx = k - 1;
        if (idx <= nmax)
            out[idx] = jk;
        if (idx > 0 && idx % 2 == 0)
            sum += 2.0 * jk;
        if (std::abs(jk) > kBig) {
            jk /= kBig;
            jp1 /= kBig;
            sum /= kBig;
            for (int i = idx; i <= std::min(nmax, start); ++i)
                out[i] /= kBig;
        }
    }
    sum += jk;
    const double inv = 1.0 / sum;
    for (int i = 0; i <= nmax; ++i)
        out[i] *= inv;
}

}  // namespace

void bessel_j_orders(int nmax, double x, double* out)
{
    if (nmax < 0)
        throw ParameterError("bessel_j_orders: nmax must be >= 0");
    if (!std::isfinite(x))
        throw ParameterError("bessel_j_orders: non-finite argument");
    orders_nonnegative(nmax, std::abs(x), out);
    if (x < 0.0)
        for (int n = 1; n <= nmax; n += 2)
            out[n] = -out[n];
}

std::vector<double> bessel_j_orders(int nmax, double x)
{
    std::vector<double> v(static_cast<std::size_t>(nmax) + 1);
    bessel_j_orders(nmax, x, v.data());
    return v;
}

void bessel_j_range(int nmin, int nmax, double x, double* out, std::vector<double>& scratch)
{
    if (nmax < nmin)
        return;
    const int top = std::max(std::abs(nmin), std::abs(nmax));
    scratch.resize(static_cast<std::size_t>(top) + 1);
    bessel_j_orders(top, x, scratch.data());
    for (int n = nmin; n <= nmax; ++n) {
        const int a = std::abs(n);
        double val = scratch[a];
        if (n < 0 && (a % 2 == 1))
            val = -val;
        out[n - nmin] = val;
    }
}

double bessel_j(int n, double x)
{
    const int a = std::abs(n);
    double buf[64];
    std::vector<double> heap;
    double* out = buf;
    if (a + 1 > 64) {
        heap.resize(static_cast<std::size_t>(a) + 1);
        out = heap.data();
    }
    bessel_j_orders(a, x, out);
    double v = out[a];
    if (n < 0 && (a % 2 == 1))
        v = -v;
    return v;
}

double bessel_j_derivative(int n, double x)
{
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

}  // namespace stdce
