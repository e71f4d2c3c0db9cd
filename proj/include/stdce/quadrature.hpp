// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace stdce {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
    // Nodes/weights mapped to [a, b].
    GaussLegendreRule mapped(double a, double b) const;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n, Golub-Welsch
/// accuracy is not needed for n <= a few hundred).
GaussLegendreRule gauss_legendre(int n);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
    std::size_t levels = 0;
};

using TanhSinh = boost::math::quadrature::tanh_sinh<double>;

/// Double-exponential rule on [a, b]. The integrand is called as
/// f(x, dist_a, dist_b) where dist_a = x - a and dist_b = b - x are exact
/// near each endpoint, so endpoint singularities such as 1/sqrt(x - a) are
/// evaluated without cancellation. The rule is taken by non-const reference
/// because the two-argument overload in Boost is not const-qualified.
template <class F>
QuadratureResult tanh_sinh_endpoint(TanhSinh& ts, F&& f, double a, double b, double tol)
{
    QuadratureResult r;
    if (!(b > a))
        return r;
    const double width = b - a;
    const double mid = 0.5 * (a + b);
    auto g = [&](double x, double xc) -> double {
        // Boost passes xc = a - x left of centre and b - x right of it.
        double da, db;
        if (x < mid) {
            da = -xc;
            db = width + xc;
        }
        else {
            db = xc;
            da = width - xc;
        }
        return f(x, da, db);
    };
    r.value = ts.integrate(g, a, b, tol, &r.error, &r.l1, &r.levels);
    return r;
}

template <class F>
QuadratureResult tanh_sinh_endpoint(F&& f, double a, double b, double tol,
                                    std::size_t max_refinements = 12)
{
    TanhSinh ts(max_refinements);
    return tanh_sinh_endpoint(ts, std::forward<F>(f), a, b, tol);
}

/// Composite Gauss-Legendre over equal panels.
template <class F>
double panel_gauss(F&& f, double a, double b, int panels, const GaussLegendreRule& rule)
{
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double c = lo + 0.5 * h;
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            s += rule.weights[i] * f(c + 0.5 * h * rule.nodes[i]);
        total += 0.5 * h * s;
    }
    return total;
}

}  // namespace stdce
