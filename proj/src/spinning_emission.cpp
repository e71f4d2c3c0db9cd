// SPDX-License-Identifier: Apache-2.0
#include "stdce/spinning_emission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "stdce/array_factors.hpp"
#include "stdce/bessel.hpp"
#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"
#include "stdce/quadrature.hpp"

namespace stdce {

namespace {

void require_u(double u)
{
    if (!(u > 0.0 && u < 1.0)) {
        std::ostringstream os;
        os << "u = omega/Omega must lie in (0, 1), got " << u;
        throw ParameterError(os.str());
    }
}

void check(const SpinningOptions& opt)
{
    if (!(opt.R > 0.0) || !std::isfinite(opt.R))
        throw ParameterError("disk radius must be positive");
    if (opt.n_theta < 0 || opt.n_radial < 0)
        throw ParameterError("node counts must be non-negative");
    if (opt.nz < 1)
        throw ParameterError("nz must be >= 1");
    if (opt.nz > 1 && !(opt.spacing > 0.0))
        throw ParameterError("layer spacing must be positive when nz > 1");
}

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Bessel tables J_n(kappa_i y_k) for n in [nmin, nmax]; one nt x ny matrix
// per order.
std::vector<Matrix> bessel_tables(int nmin, int nmax, const std::vector<double>& kappa,
                                  const std::vector<double>& y)
{
    const int nord = nmax - nmin + 1;
    std::vector<Matrix> t(nord, Matrix(kappa.size(), y.size()));
    std::vector<double> buf(nord), scratch;
    for (std::size_t i = 0; i < kappa.size(); ++i)
        for (std::size_t k = 0; k < y.size(); ++k) {
            bessel_j_range(nmin, nmax, kappa[i] * y[k], buf.data(), scratch);
            for (int n = 0; n < nord; ++n)
                t[n](i, k) = buf[n];
        }
    return t;
}

}  // namespace

int SpinningOptions::theta_nodes() const
{
    return n_theta > 0 ? n_theta : static_cast<int>(std::ceil(3.0 * R)) + 20;
}

int SpinningOptions::radial_nodes() const
{
    return n_radial > 0 ? n_radial : static_cast<int>(std::ceil(2.0 * R)) + 40;
}

SpinningKinematics make_spinning_kinematics(double u, double kappa, double kappa_prime, int zeta,
                                            int zeta_prime, int eta, int eta_prime, int m,
                                            int ell, double R)
{
    require_u(u);
    const double v = 1.0 - u;
    if (!(kappa >= 0.0 && kappa <= u) || !(kappa_prime >= 0.0 && kappa_prime <= v))
        throw ParameterError("kappa must lie in [0, u] and kappa' in [0, 1 - u]");
    SpinningKinematics k;
    k.u = u;
    k.kappa = kappa;
    k.kappa_prime = kappa_prime;
    k.kappa_z = (zeta >= 0 ? 1.0 : -1.0) * std::sqrt((u - kappa) * (u + kappa));
    k.kappa_z_prime = (zeta_prime >= 0 ? 1.0 : -1.0) * std::sqrt((v - kappa_prime) * (v + kappa_prime));
    k.eta = eta >= 0 ? 1 : -1;
    k.eta_prime = eta_prime >= 0 ? 1 : -1;
    k.m = m;
    k.ell = ell;
    k.R = R;
    return k;
}

TTerms t_terms(const SpinningKinematics& kin, const RadialIntegralSet& I)
{
    const double u = kin.u;
    const double v = 1.0 - u;
    const double kz = kin.kappa_z, kzp = kin.kappa_z_prime;
    const double k = kin.kappa, kp = kin.kappa_prime;
    const double A = kz + kin.eta * u, B = kz - kin.eta * u;
    const double Ap = kzp + kin.eta_prime * v, Bp = kzp - kin.eta_prime * v;
    const double G = kz * v / u + kzp * u / v;
    const double k2 = k * k, kp2 = kp * kp;
    TTerms t;
    t.a = (G * A * Bp + kp2 * A / (2 * v) + k2 * Bp / (2 * u)) * I.H_minus;
    t.b = (G * Ap * B + k2 * Ap / (2 * u) + kp2 * B / (2 * v)) * I.H_plus;
    t.c = -2.0 * (kz + kzp) * k * kp * I.H0;
    t.d = -(kp2 * A / (2 * v) + k2 * Ap / (2 * u)) * I.I_minus -
          (kp2 * B / (2 * v) + k2 * Bp / (2 * u)) * I.I_plus;
    t.e = kin.m * k * Ap / u * I.J_minus + kin.m * k * Bp / u * I.J_plus +
          (kin.ell - kin.m) * kp * A / v * I.K_minus + (kin.ell - kin.m) * kp * B / v * I.K_plus;
    return t;
}

TTerms t_terms_printed(const SpinningKinematics& kin, const RadialIntegralSet& I)
{
    const double u = kin.u;
    const double v = 1.0 - u;
    const double kz = kin.kappa_z, kzp = kin.kappa_z_prime;
    const double k = kin.kappa, kp = kin.kappa_prime;
    const double A = kz + kin.eta * u, B = kz - kin.eta * u;
    const double Ap = kzp + kin.eta_prime * v, Bp = kzp - kin.eta_prime * v;
    const double k2 = k * k, kp2 = kp * kp;
    TTerms t;
    t.a = ((kz + kzp * (1 + 1 / v)) * A * Bp + kp2 * A / (2 * v) + k2 * Bp / (2 * u)) * I.H_minus;
    t.b = ((kzp + kz * (1 + 1 / u)) * Ap * B + k2 * Ap / (2 * u) + kp2 * B / (2 * v)) * I.H_plus;
    t.c = (kz * (2 + 1 / u) + kzp * (2 + 1 / v)) * k * kp * I.H0;
    t.d = -(kp2 * A / (2 * v) + k2 * Bp / (2 * u)) * I.I_minus -
          (kp2 * B / (2 * v) + k2 * Ap / (2 * u)) * I.I_plus;
    t.e = kin.m * k * Ap / u * I.J_minus + kin.m * k * Bp / u * I.J_plus +
          (kin.ell - kin.m) * kp * A / v * I.K_minus + (kin.ell - kin.m) * kp * B / v * I.K_plus;
    return t;
}

std::vector<double> f_ell_m_window(double u, int m_lo, int m_hi, int ell,
                                   const SpinningOptions& opt)
{
    require_u(u);
    check(opt);
    if (m_hi < m_lo)
        return {};
    const double v = 1.0 - u;
    const double R = opt.R;
    const int nt = opt.theta_nodes();
    const int ny = opt.radial_nodes();

    const auto th = gauss_legendre(nt).mapped(0.0, 0.5 * kPi);
    const auto yr = gauss_legendre(ny).mapped(0.0, R);

    std::vector<double> kap(nt), kapp(nt), kz(nt), kzp(nt), wk(nt);
    for (int i = 0; i < nt; ++i) {
        const double s = std::sin(th.nodes[i]);
        const double c = std::cos(th.nodes[i]);
        kap[i] = u * s;
        kapp[i] = v * s;
        kz[i] = u * c;
        kzp[i] = v * c;
        wk[i] = th.weights[i] * s;  // kappa dkappa / |kz| = u sin(theta) dtheta
    }

    // Photon 1 orders m-1 ... m+1, photon 2 orders m-1-ell ... m+1-ell.
    const int n1lo = m_lo - 1, n1hi = m_hi + 1;
    const int n2lo = m_lo - ell - 1, n2hi = m_hi - ell + 1;
    const auto T1 = bessel_tables(n1lo, n1hi, kap, yr.nodes);
    const auto T2 = bessel_tables(n2lo, n2hi, kapp, yr.nodes);

    Eigen::VectorXd wy(ny), w0(ny);
    for (int k = 0; k < ny; ++k) {
        w0(k) = yr.weights[k];
        wy(k) = yr.weights[k] * yr.nodes[k];
    }

    const bool layered = opt.nz > 1;
    const double lz = opt.nz * opt.spacing;

    std::vector<double> out;
    out.reserve(m_hi - m_lo + 1);
    Matrix Py, Qy, Zy, P0, Q0, Z0;
    for (int m = m_lo; m <= m_hi; ++m) {
        const Matrix& P1 = T1[m - 1 - n1lo];
        const Matrix& Z1 = T1[m - n1lo];
        const Matrix& Q1 = T1[m + 1 - n1lo];
        const Matrix& P2 = T2[m - 1 - ell - n2lo];
        const Matrix& Z2 = T2[m - ell - n2lo];
        const Matrix& Q2 = T2[m + 1 - ell - n2lo];

        Py = P1 * wy.asDiagonal();
        Qy = Q1 * wy.asDiagonal();
        Zy = Z1 * wy.asDiagonal();
        Z0 = Z1 * w0.asDiagonal();
        Q0 = Q1 * w0.asDiagonal();
        P0 = P1 * w0.asDiagonal();

        const double s = ((m - ell) % 2 == 0) ? 1.0 : -1.0;
        const Matrix Hm = -s * (Py * P2.transpose());
        const Matrix Hp = -s * (Qy * Q2.transpose());
        const Matrix H0 = s * (Zy * Z2.transpose());
        const Matrix Ip = -s * (Qy * P2.transpose());
        const Matrix Im = -s * (Py * Q2.transpose());
        const Matrix Jp = -s * (Z0 * P2.transpose());
        const Matrix Jm = -s * (Z0 * Q2.transpose());
        const Matrix Kp = s * (Q0 * Z2.transpose());
        const Matrix Km = s * (P0 * Z2.transpose());

        double total = 0.0;
        RadialIntegralSet I;
        SpinningKinematics kin;
        kin.u = u;
        kin.m = m;
        kin.ell = ell;
        kin.R = R;
        for (int i = 0; i < nt; ++i) {
            double row = 0.0;
            for (int j = 0; j < nt; ++j) {
                I.H_minus = Hm(i, j);
                I.H_plus = Hp(i, j);
                I.H0 = H0(i, j);
                I.I_plus = Ip(i, j);
                I.I_minus = Im(i, j);
                I.J_plus = Jp(i, j);
                I.J_minus = Jm(i, j);
                I.K_plus = Kp(i, j);
                I.K_minus = Km(i, j);
                kin.kappa = kap[i];
                kin.kappa_prime = kapp[j];
                double acc = 0.0;
                for (int zeta : {1, -1}) {
                    for (int zetap : {1, -1}) {
                        kin.kappa_z = zeta * kz[i];
                        kin.kappa_z_prime = zetap * kzp[j];
                        double sq = 0.0;
                        for (int eta : {1, -1}) {
                            for (int etap : {1, -1}) {
                                kin.eta = eta;
                                kin.eta_prime = etap;
                                const double t = t_terms(kin, I).sum();
                                sq += t * t;
                            }
                        }
                        if (layered)
                            sq *= af2_closed(kin.kappa_z + kin.kappa_z_prime, opt.nz, lz);
                        acc += sq;
                    }
                }
                row += wk[j] * acc;
            }
            total += wk[i] * row;
        }
        out.push_back(u * v * total);
    }
    return out;
}

double f_ell_m(double u, int m, int ell, const SpinningOptions& opt)
{
    return f_ell_m_window(u, m, m, ell, opt)[0];
}

int default_m_max(double R, int ell)
{
    (void)ell;
    return static_cast<int>(std::ceil(1.2 * R)) + 8;
}

SpectralWeight f_ell(double u, int ell, int m_max, const SpinningOptions& opt, int m_cap)
{
    if (m_max < 2)
        throw ParameterError("m_max must be >= 2");
    if (m_cap < 0)
        m_cap = std::max(m_max, static_cast<int>(std::ceil(4.0 * opt.R)) + 40);
    SpectralWeight w;
    w.u = u;
    int M = m_max;
    for (;;) {
        w.m_lo = std::min(0, ell) - M;
        w.m_hi = std::max(0, ell) + M;
        w.per_m = f_ell_m_window(u, w.m_lo, w.m_hi, ell, opt);
        w.sum = 0.0;
        for (double x : w.per_m)
            w.sum += x;
        const std::size_t n = w.per_m.size();
        const double tail = w.per_m[0] + w.per_m[1] + w.per_m[n - 1] + w.per_m[n - 2];
        w.tail_fraction = w.sum > 0.0 ? tail / w.sum : 0.0;
        w.converged = w.tail_fraction < kTailTolerance;
        if (w.converged || M >= m_cap)
            break;
        M = std::min(m_cap, M + 4);
    }
    w.density = kPi / (4.0 * opt.R * opt.R) * w.sum;
    return w;
}

std::vector<double> spinning_frequency_nodes(int n_u)
{
    if (n_u < 2)
        throw ParameterError("need at least two frequency nodes");
    return gauss_legendre(n_u).mapped(0.0, 1.0).nodes;
}

SpinningRate spinning_rate_from_weights(int ell, double R, const std::vector<SpectralWeight>& w)
{
    const int n_u = static_cast<int>(w.size());
    const auto rule = gauss_legendre(n_u).mapped(0.0, 1.0);
    SpinningRate r;
    r.ell = ell;
    r.R = R;
    double integral = 0.0;
    for (int i = 0; i < n_u; ++i) {
        if (std::abs(w[i].u - rule.nodes[i]) > 1e-14)
            throw ParameterError("spectral weights are not on the Gauss-Legendre frequency nodes");
        r.u.push_back(w[i].u);
        r.density.push_back(w[i].density);
        r.max_tail = std::max(r.max_tail, w[i].tail_fraction);
        r.converged = r.converged && w[i].converged;
        integral += rule.weights[i] * w[i].sum;
    }
    r.value = kPi / (8.0 * R * R) * integral;
    return r;
}

SpinningRate total_rate_spinning(int ell, const SpinningOptions& opt, int m_max, int n_u)
{
    check(opt);
    if (m_max < 0)
        m_max = default_m_max(opt.R, ell);
    std::vector<SpectralWeight> w;
    for (double u : spinning_frequency_nodes(n_u))
        w.push_back(f_ell(u, ell, m_max, opt));
    return spinning_rate_from_weights(ell, opt.R, w);
}

Af3Result af3_conservation(int m1, int m2, int ell)
{
    Af3Result r;
    r.allowed = (m1 + m2 == ell);
    r.azimuthal_weight = r.allowed ? 4.0 * kPi * kPi : 0.0;
    return r;
}

RadiusExtrapolation extrapolate_radius(int ell, const std::vector<double>& radii,
                                       const SpinningOptions& base, int n_u)
{
    if (radii.empty())
        throw ParameterError("need at least one radius");
    RadiusExtrapolation x;
    x.radii = radii;
    for (double R : radii) {
        SpinningOptions o = base;
        o.R = R;
        o.n_theta = 0;
        o.n_radial = 0;
        x.rates.push_back(total_rate_spinning(ell, o, -1, n_u).value);
    }
    const int n = static_cast<int>(radii.size());
    const int terms = std::min(n, 3);
    Eigen::MatrixXd A(n, terms);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < terms; ++j)
            A(i, j) = std::pow(1.0 / radii[i], j);
        b(i) = x.rates[i];
    }
    x.extrapolated = A.colPivHouseholderQr().solve(b)(0);
    return x;
}

}  // namespace stdce
