// SPDX-License-Identifier: Apache-2.0
#include "af_blocks.hpp"
#include "stdce/kernels.hpp"

namespace stdce::serial {

double af_sum(const Vec3& dk, const CubicLattice& g, const Vec3& origin)
{
    const long long nb = detail::block_count(g);
    std::vector<std::complex<double>> blocks(nb);
    for (long long b = 0; b < nb; ++b)
        blocks[b] = detail::atom_block_sum(dk, g, origin, b);
    return std::norm(detail::pairwise_reduce(std::move(blocks)));
}

std::vector<double> spectral_grid(const std::vector<SpectralPoint>& pts, const LinearOptions& opt)
{
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        out[i] = spectral_rate(pts[i].omega, pts[i].beta, pts[i].pol, opt);
    return out;
}

std::vector<double> density_grid(const std::vector<DensityPoint>& pts, const LinearOptions& opt)
{
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        out[i] = density_f(p.theta, p.phi, p.omega, p.beta, p.pol, p.zeta, opt);
    }
    return out;
}

std::vector<RateResult> rate_grid(const std::vector<RatePoint>& pts, const LinearOptions& opt)
{
    std::vector<RateResult> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        out[i] = total_rate(pts[i].beta, pts[i].pol, opt);
    return out;
}

SpinningGrid spinning_grid(const std::vector<double>& u, int m_lo, int m_hi, int ell,
                           const SpinningOptions& opt)
{
    SpinningGrid g{ell, m_lo, m_hi, u, std::vector<std::vector<double>>(u.size())};
    for (std::size_t i = 0; i < u.size(); ++i)
        g.f[i] = f_ell_m_window(u[i], m_lo, m_hi, ell, opt);
    return g;
}

std::vector<SpectralWeight> spinning_weights(const std::vector<double>& u, int ell, int m_max,
                                             const SpinningOptions& opt)
{
    std::vector<SpectralWeight> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = f_ell(u[i], ell, m_max, opt);
    return w;
}

}  // namespace stdce::serial
