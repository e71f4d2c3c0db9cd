// SPDX-License-Identifier: Apache-2.0
#include <omp.h>

#include <exception>

#include "af_blocks.hpp"
#include "stdce/errors.hpp"
#include "stdce/kernels.hpp"

namespace stdce {

namespace {

// Runs body(i) for i in [0, n) on the OpenMP team. Exceptions are kept per
// index and the one with the lowest index is rethrown, so failures do not
// depend on scheduling either.
template <class Body>
void parallel_for(long long n, Body&& body)
{
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            body(i);
        }
        catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace

namespace omp {

double af_sum(const Vec3& dk, const CubicLattice& g, const Vec3& origin)
{
    const long long nb = detail::block_count(g);
    std::vector<std::complex<double>> blocks(nb);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < nb; ++b)
        blocks[b] = detail::atom_block_sum(dk, g, origin, b);
    return std::norm(detail::pairwise_reduce(std::move(blocks)));
}

std::vector<double> spectral_grid(const std::vector<SpectralPoint>& pts, const LinearOptions& opt)
{
    std::vector<double> out(pts.size());
    parallel_for(static_cast<long long>(pts.size()), [&](long long i) {
        out[i] = spectral_rate(pts[i].omega, pts[i].beta, pts[i].pol, opt);
    });
    return out;
}

std::vector<double> density_grid(const std::vector<DensityPoint>& pts, const LinearOptions& opt)
{
    std::vector<double> out(pts.size());
    parallel_for(static_cast<long long>(pts.size()), [&](long long i) {
        const auto& p = pts[i];
        out[i] = density_f(p.theta, p.phi, p.omega, p.beta, p.pol, p.zeta, opt);
    });
    return out;
}

std::vector<RateResult> rate_grid(const std::vector<RatePoint>& pts, const LinearOptions& opt)
{
    std::vector<RateResult> out(pts.size());
    parallel_for(static_cast<long long>(pts.size()),
                 [&](long long i) { out[i] = total_rate(pts[i].beta, pts[i].pol, opt); });
    return out;
}

SpinningGrid spinning_grid(const std::vector<double>& u, int m_lo, int m_hi, int ell,
                           const SpinningOptions& opt)
{
    // One task per frequency: its Bessel tables are private to the task.
    SpinningGrid g{ell, m_lo, m_hi, u, std::vector<std::vector<double>>(u.size())};
    parallel_for(static_cast<long long>(u.size()),
                 [&](long long i) { g.f[i] = f_ell_m_window(u[i], m_lo, m_hi, ell, opt); });
    return g;
}

std::vector<SpectralWeight> spinning_weights(const std::vector<double>& u, int ell, int m_max,
                                             const SpinningOptions& opt)
{
    std::vector<SpectralWeight> w(u.size());
    parallel_for(static_cast<long long>(u.size()),
                 [&](long long i) { w[i] = f_ell(u[i], ell, m_max, opt); });
    return w;
}

}  // namespace omp

void set_thread_count(int n)
{
    if (n < 1)
        throw ParameterError("thread count must be >= 1");
    omp_set_num_threads(n);
}

int thread_count()
{
    return omp_get_max_threads();
}

int available_cores()
{
    return omp_get_num_procs();
}

}  // namespace stdce
