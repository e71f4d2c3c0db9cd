// SPDX-License-Identifier: Apache-2.0
#include "stdce/linear_emission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stdce/array_factors.hpp"
#include "stdce/errors.hpp"
#include "stdce/quadrature.hpp"

namespace stdce {

namespace {

constexpr double kEndpointMargin = 1e-9;
constexpr std::size_t kMaxRefinements = 10;
constexpr int kSliceNodes = 16;
constexpr double kSlicePanelWidth = 1.0;

const GaussLegendreRule& slice_rule()
{
    static const GaussLegendreRule rule = gauss_legendre(kSliceNodes);
    return rule;
}

// One rule per nesting level and thread: Boost extends the abscissa tables
// lazily inside integrate(), so a rule must not be re-entered.
TanhSinh& level_rule(int level)
{
    thread_local TanhSinh rules[2] = {TanhSinh(kMaxRefinements), TanhSinh(kMaxRefinements)};
    return rules[level];
}

void require_frequency(double omega1)
{
    if (!(omega1 > 0.0 && omega1 < 1.0)) {
        std::ostringstream os;
        os << "photon frequency must lie in (0, Omega), got " << omega1 << " Omega";
        throw ParameterError(os.str());
    }
}

int lin_index(Polarization p)
{
    return p == Polarization::TE ? 0 : 1;
}

// sum_{lambda2} AF2 |W~(K1, lambda1; K2, lambda2)|^2 for one zeta2.
double partner_weight(const Vec3& K1, Polarization l1, const Vec3& K2, const LinearOptions& opt)
{
    const auto a = linear_amplitudes(K1, K2);
    double s = 0.0;
    if (l1 == Polarization::TE || l1 == Polarization::TM) {
        const int i = lin_index(l1);
        if (opt.exclude_cross)
            s = a.w[i][i] * a.w[i][i];
        else
            s = a.w[i][0] * a.w[i][0] + a.w[i][1] * a.w[i][1];
    }
    else {
        s = std::norm(circular_amplitude(a, l1, Polarization::TE)) +
            std::norm(circular_amplitude(a, l1, Polarization::TM));
    }
    if (opt.nz > 1)
        s *= af2_closed(K1[2] + K2[2], opt.nz, opt.nz * opt.spacing);
    return s;
}

// sum over zeta2 of partner_weight; k2z > 0 is the partner's |kz|.
double both_zeta2(const Vec3& K1, Polarization l1, const Vec2& k2, double k2z,
                  const LinearOptions& opt)
{
    return partner_weight(K1, l1, Vec3{k2[0], k2[1], k2z}, opt) +
           partner_weight(K1, l1, Vec3{k2[0], k2[1], -k2z}, opt);
}

void check_options(const LinearOptions& opt)
{
    if (!(opt.tolerance > 0.0 && opt.tolerance <= 1e-2))
        throw ParameterError("tolerance must lie in (0, 1e-2]");
    if (opt.nz < 1)
        throw ParameterError("nz must be >= 1");
    if (opt.nz > 1 && !(opt.spacing > 0.0))
        throw ParameterError("layer spacing must be positive when nz > 1");
}

// Integral over s = sin(theta) in [0,1] and both zeta1 at fixed azimuth
// (kick along x). Integrand u^3 v^2 s W / (cos(theta) |k2z|) with
// |k2z| = u sqrt((s - s_minus)(s_plus - s)).
//
// The upper limit carries two inverse square roots, at hi and at hi + g with
// g = |s_plus - 1|, which nearly coalesce close to the grazing azimuth. The
// range is split at its midpoint: the lower half uses s = s_minus + t^2 and
// the upper half s = hi - g sinh^2(y), which make both halves smooth. All
// distances to the singular points are formed without cancellation.
double inner_s(double u, double b, double phi, Polarization l1, const LinearOptions& opt)
{
    const double v = 1.0 - u;
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);
    const double disc = v * v - b * b * sphi * sphi;
    if (disc <= 0.0)
        return 0.0;
    const double r = std::sqrt(disc);
    const double sm = (b * cphi - r) / u;
    const double sp = (b * cphi + r) / u;
    const double lo = std::max(0.0, sm);
    const double hi = std::min(1.0, sp);
    if (!(hi > lo))
        return 0.0;
    const double gap_lo = lo - sm;
    const bool grazing_end = sp >= 1.0;
    const double g = grazing_end ? sp - 1.0 : 1.0 - sp;
    const double mid = 0.5 * (lo + hi);
    const double pref = u * u * u * v * v;

    // Sum over zeta1 and the partner of the squared amplitudes.
    auto weight = [&](double s, double d_one, double d_minus, double d_plus) {
        const double c1 = std::sqrt(d_one * (1.0 + s));
        const double kz2 = u * std::sqrt(d_minus * d_plus);
        const Vec2 k2{b - u * s * cphi, -u * s * sphi};
        double w = 0.0;
        for (int zeta1 : {1, -1}) {
            const Vec3 K1{u * s * cphi, u * s * sphi, zeta1 * u * c1};
            w += both_zeta2(K1, l1, k2, kz2, opt);
        }
        return w;
    };

    auto lower = [&](double t) -> double {
        const double d_minus = t * t;
        const double s = sm + d_minus;
        const double d_one = 1.0 - s;
        const double d_plus = sp - s;
        if (!(d_one > 0.0) || !(d_plus > 0.0))
            return 0.0;
        const double w = weight(s, d_one, d_minus, d_plus);
        return 2.0 * pref * s * w / (std::sqrt(d_one * (1.0 + s)) * u * std::sqrt(d_plus));
    };

    auto upper = [&](double y) -> double {
        double d_hi, d_other, jac;
        if (g > 0.0) {
            const double sh = std::sinh(y);
            const double ch = std::cosh(y);
            d_hi = g * sh * sh;
            d_other = g * ch * ch;
            jac = 2.0;  // ds / (sqrt(d_hi) sqrt(d_other)) = 2 dy
        }
        else {
            d_hi = y * y;
            d_other = y * y;
            jac = 2.0 / y;
        }
        const double s = hi - d_hi;
        const double d_one = grazing_end ? d_hi : d_other;
        const double d_plus = grazing_end ? d_other : d_hi;
        const double d_minus = s - sm;
        if (!(d_hi > 0.0) || !(d_minus > 0.0))
            return 0.0;
        const double w = weight(s, d_one, d_minus, d_plus);
        return jac * pref * s * w / (std::sqrt(1.0 + s) * u * std::sqrt(d_minus));
    };

    const double t0 = std::sqrt(gap_lo);
    const double t1 = std::sqrt(mid - sm);
    const double y1 = g > 0.0 ? std::asinh(std::sqrt((hi - mid) / g)) : std::sqrt(hi - mid);
    const auto& rule = slice_rule();
    const int panels = std::max(1, static_cast<int>(std::ceil(y1 / kSlicePanelWidth)));

    // A single partner polarization depends on the direction of k2, which
    // turns by pi within |s - s_star| ~ width where the slice passes closest
    // to k2 = 0. Sums over the partner basis are smooth there.
    const double s_star = b * cphi / u;
    const double width = b * std::abs(sphi) / u;
    const bool resolve = opt.exclude_cross && b > 0.0 && s_star > lo && s_star < hi;
    if (!resolve)
        return panel_gauss(lower, t0, t1, 1, rule) + panel_gauss(upper, 0.0, y1, panels, rule);

    std::vector<double> tb{t0, t1};
    std::vector<double> yb{0.0, y1};
    for (int p = 1; p < panels; ++p)
        yb.push_back(y1 * p / panels);
    auto add = [&](double s) {
        if (!(s > lo && s < hi))
            return;
        if (s <= mid)
            tb.push_back(std::sqrt(s - sm));
        else
            yb.push_back(g > 0.0 ? std::asinh(std::sqrt((hi - s) / g)) : std::sqrt(hi - s));
    };
    add(s_star);
    for (double d = 0.25 * width; d > 0.0 && d < hi - lo; d *= 4.0) {
        add(s_star - d);
        add(s_star + d);
    }
    std::sort(tb.begin(), tb.end());
    std::sort(yb.begin(), yb.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < tb.size(); ++i)
        if (tb[i + 1] > tb[i])
            total += panel_gauss(lower, tb[i], tb[i + 1], 1, rule);
    for (std::size_t i = 0; i + 1 < yb.size(); ++i)
        if (yb[i + 1] > yb[i])
            total += panel_gauss(upper, yb[i], yb[i + 1], 1, rule);
    return total;
}

}  // namespace

double slice_rate(double omega, double beta, double phi, Polarization lambda,
                  const LinearOptions& opt)
{
    require_frequency(omega);
    check_options(opt);
    return inner_s(omega, std::abs(beta), phi, lambda, opt);
}

namespace {

// The error estimate of tanh-sinh is the difference of the last two levels,
// which overstates the true error; only a miss by kConvergenceSlack counts.
// Boost stops before the last level once the estimate grows (rounding
// floor), so only a run that used every level can be a true failure.
constexpr double kConvergenceSlack = 1e3;
// Absolute error floor in Gamma0/Omega units. Near a grazing cusp the slice
// is only conditioned to about 1e-6 relative, which can stall a panel whose
// contribution is far below any tolerance of interest.
constexpr double kAbsoluteFloor = 1e-11;

void accumulate(QuadratureResult& total, const QuadratureResult& panel)
{
    total.value += panel.value;
    total.error += panel.error;
    total.l1 += panel.l1;
    total.levels = std::max(total.levels, panel.levels);
}

template <class Diag>
void check_converged(const QuadratureResult& r, double tol, const char* level, Diag&& diag)
{
    const bool finite = std::isfinite(r.value) && std::isfinite(r.error);
    const bool exhausted = r.levels >= kMaxRefinements;
    if (finite && (!exhausted || r.error <= kConvergenceSlack * tol * r.l1 + kAbsoluteFloor))
        return;
    std::ostringstream os;
    os << diag() << " value=" << r.value << " error=" << r.error << " l1=" << r.l1
       << " levels=" << r.levels;
    throw NumericalError(std::string(level) + " quadrature did not converge", os.str());
}

std::vector<double> azimuth_breaks(double u, double b)
{
    const double v = 1.0 - u;
    double end = kPi;
    if (b > v)
        end = std::asin(v / b);
    std::vector<double> pts{0.0};
    const double c = (u * u + b * b - v * v) / (2.0 * u * b);
    if (c > -1.0 && c < 1.0) {
        const double p1 = std::acos(c);
        if (p1 > 0.0 && p1 < end)
            pts.push_back(p1);
    }
    // For b just below v the allowed band pinches at phi = pi/2.
    if (b <= v)
        pts.push_back(0.5 * kPi);
    pts.push_back(end);
    std::sort(pts.begin(), pts.end());
    // The grazing azimuth meets pi/2 when u^2 + b^2 = v^2.
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double c) { return std::abs(a - c) < 1e-12; }),
              pts.end());
    return pts;
}

}  // namespace

PartnerKinematics partner(const Vec2& k1, double omega1, const Vec2& beta)
{
    require_frequency(omega1);
    PartnerKinematics p;
    p.omega2 = 1.0 - omega1;
    p.k2 = {beta[0] - k1[0], beta[1] - k1[1]};
    const double k1sq = k1[0] * k1[0] + k1[1] * k1[1];
    const double k2sq = p.k2[0] * p.k2[0] + p.k2[1] * p.k2[1];
    p.photon1_evanescent = k1sq > omega1 * omega1;
    const double q = p.omega2 * p.omega2 - k2sq;
    p.evanescent = p.photon1_evanescent || q < 0.0;
    if (!p.evanescent) {
        p.k2z_abs = std::sqrt(q);
        p.allowed_zeta2 = {1, -1};
    }
    return p;
}

double density_f_k(const Vec2& k1, double omega1, const Vec2& beta, Polarization lambda1,
                   int zeta1, const LinearOptions& opt)
{
    check_options(opt);
    const auto p = partner(k1, omega1, beta);
    if (p.evanescent || !(p.k2z_abs > 0.0))
        return 0.0;
    const double u = omega1;
    const double v = p.omega2;
    const double k1z = (zeta1 >= 0 ? 1.0 : -1.0) *
                       std::sqrt(std::max(0.0, u * u - (k1[0] * k1[0] + k1[1] * k1[1])));
    const Vec3 K1{k1[0], k1[1], k1z};
    return u * v * v / p.k2z_abs * both_zeta2(K1, lambda1, p.k2, p.k2z_abs, opt);
}

double density_f(double theta, double phi, double omega1, const Vec2& beta, Polarization lambda1,
                 int zeta1, const LinearOptions& opt)
{
    require_frequency(omega1);
    const double s = std::sin(theta);
    const Vec2 k1{omega1 * s * std::cos(phi), omega1 * s * std::sin(phi)};
    return density_f_k(k1, omega1, beta, lambda1, zeta1, opt);
}

double spectral_rate(double omega, double beta, Polarization lambda, const LinearOptions& opt)
{
    require_frequency(omega);
    check_options(opt);
    const double b = std::abs(beta);
    if (!std::isfinite(b))
        throw ParameterError("kick must be finite");
    if (b >= 1.0)
        return 0.0;
    const double u = omega;
    if (b == 0.0)
        return 2.0 * kPi * inner_s(u, 0.0, 0.0, lambda, opt);

    const auto brk = azimuth_breaks(u, b);
    const double tol = 0.1 * opt.tolerance;
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        auto g = [&](double phi, double, double) { return inner_s(u, b, phi, lambda, opt); };
        accumulate(total, tanh_sinh_endpoint(level_rule(0), g, brk[i], brk[i + 1], tol));
    }
    check_converged(total, tol, "azimuthal", [&] {
        std::ostringstream os;
        os << "omega=" << omega << " beta=" << beta;
        return os.str();
    });
    // phi in [0, pi] covers half the circle; the integrand is even in phi.
    return 2.0 * total.value;
}

std::vector<double> frequency_breakpoints(double beta)
{
    const double b = std::abs(beta);
    std::vector<double> pts{kEndpointMargin};
    for (double x : {0.5 * (1.0 - b), 0.5 * (1.0 + b), 1.0 - b})
        if (x > kEndpointMargin && x < 1.0 - kEndpointMargin)
            pts.push_back(x);
    pts.push_back(1.0 - kEndpointMargin);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double c) { return std::abs(a - c) < 1e-14; }),
              pts.end());
    return pts;
}

RateResult total_rate(double beta, Polarization lambda, const LinearOptions& opt)
{
    check_options(opt);
    const double b = std::abs(beta);
    RateResult out;
    if (b >= 1.0)
        return out;
    const auto brk = frequency_breakpoints(b);
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        auto g = [&](double u, double, double) { return spectral_rate(u, b, lambda, opt); };
        accumulate(total, tanh_sinh_endpoint(level_rule(1), g, brk[i], brk[i + 1], opt.tolerance));
    }
    check_converged(total, opt.tolerance, "frequency", [&] {
        std::ostringstream os;
        os << "beta=" << beta << " lambda=" << to_string(lambda);
        return os.str();
    });
    out.value = 0.5 * total.value;
    out.error = 0.5 * total.error;
    return out;
}

RateResult total_rate_sum(double beta, const LinearOptions& opt)
{
    const auto te = total_rate(beta, Polarization::TE, opt);
    const auto tm = total_rate(beta, Polarization::TM, opt);
    return {te.value + tm.value, te.error + tm.error};
}

std::vector<double> lobes_finite_array(double beta_y, double omega1, Polarization lambda1,
                                       const CubicLattice& g, const std::vector<double>& thetas)
{
    require_frequency(omega1);
    validate(ArrayGeometry{g});
    if (lambda1 != Polarization::TE && lambda1 != Polarization::TM)
        throw ParameterError("lobes are traced for TE or TM photons");
    const double u = omega1;
    const double v = 1.0 - u;
    const double ntot = static_cast<double>(g.nx) * g.ny * g.nz;
    const Vec3 K2{0.0, 0.0, v};
    const int i = lin_index(lambda1);
    std::vector<double> out;
    out.reserve(thetas.size());
    for (double th : thetas) {
        const Vec3 K1{0.0, u * std::sin(th), u * std::cos(th)};
        const auto a = linear_amplitudes(K1, K2);
        const double w2 = a.w[i][0] * a.w[i][0] + a.w[i][1] * a.w[i][1];
        FormFactorArgs args;
        args.geometry = g;
        args.dk_inplane = {K1[0], K1[1] - beta_y};
        const double af1 = af1_closed(args);
        const double af2 = af2_closed(K1[2] + K2[2], g.nz, g.length_z());
        out.push_back(u * v * w2 * af1 * af2 / (ntot * ntot));
    }
    return out;
}

JointPairDistribution joint_pair_distribution(const Vec2& beta, const std::vector<double>& omega,
                                              const std::vector<double>& kx,
                                              const std::vector<double>& ky,
                                              const LinearOptions& opt)
{
    const double b = std::hypot(beta[0], beta[1]);
    if (!(b < 1.0))
        throw ParameterError("joint distribution needs |c beta / Omega| < 1");
    if (omega.empty() || kx.empty() || ky.empty())
        throw ParameterError("joint distribution grid must be non-empty");
    JointPairDistribution d;
    d.beta = beta;
    d.omega = omega;
    d.kx = kx;
    d.ky = ky;
    d.normalization = 2.0 * total_rate_sum(b, opt).value;
    d.density.assign(omega.size() * kx.size() * ky.size(), 0.0);
    for (std::size_t iw = 0; iw < omega.size(); ++iw) {
        const double u = omega[iw];
        require_frequency(u);
        for (std::size_t ix = 0; ix < kx.size(); ++ix) {
            for (std::size_t iy = 0; iy < ky.size(); ++iy) {
                const Vec2 k1{kx[ix], ky[iy]};
                const double k1sq = k1[0] * k1[0] + k1[1] * k1[1];
                if (!(k1sq < u * u))
                    continue;
                const double k1z = std::sqrt(u * u - k1sq);
                double val = 0.0;
                for (int zeta1 : {1, -1})
                    for (Polarization l : {Polarization::TE, Polarization::TM})
                        val += density_f_k(k1, u, beta, l, zeta1, opt);
                d.density[(iw * kx.size() + ix) * ky.size() + iy] =
                    u * val / k1z / d.normalization;
            }
        }
    }
    return d;
}

}  // namespace stdce
