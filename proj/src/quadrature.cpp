// SPDX-License-Identifier: Apache-2.0
#include "stdce/quadrature.hpp"

#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"

namespace stdce {

GaussLegendreRule GaussLegendreRule::mapped(double a, double b) const
{
    GaussLegendreRule out;
    out.nodes.resize(size());
    out.weights.resize(size());
    const double half = 0.5 * (b - a);
    const double centre = 0.5 * (a + b);
    for (std::size_t i = 0; i < size(); ++i) {
        out.nodes[i] = centre + half * nodes[i];
        out.weights[i] = half * weights[i];
    }
    return out;
}

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1)
        throw ParameterError("Gauss-Legendre order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace stdce
