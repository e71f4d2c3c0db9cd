// SPDX-License-Identifier: Apache-2.0
//
// Grid kernels in two builds with identical signatures: serial:: is the
// reference, omp:: spreads points over OpenMP threads. Every point is an
// independent pure evaluation and reductions use a fixed tree, so both
// return bit-identical results for any thread count.
#pragma once

#include <vector>

#include "stdce/core_params.hpp"
#include "stdce/linear_emission.hpp"
#include "stdce/polarization.hpp"
#include "stdce/spinning_emission.hpp"

namespace stdce {

struct SpectralPoint {
    double omega = 0.5;
    double beta = 0.0;
    Polarization pol = Polarization::TE;
};

struct DensityPoint {
    double theta = 0.0;
    double phi = 0.0;
    double omega = 0.5;
    Vec2 beta{0.0, 0.0};
    Polarization pol = Polarization::TE;
    int zeta = 1;
};

struct RatePoint {
    double beta = 0.0;
    Polarization pol = Polarization::TE;
};

/// One row per frequency: f_ell(u, m) for m in [m_lo, m_hi].
struct SpinningGrid {
    int ell = 0;
    int m_lo = 0;
    int m_hi = 0;
    std::vector<double> u;
    std::vector<std::vector<double>> f;
};

namespace serial {

double af_sum(const Vec3& dk, const CubicLattice& g, const Vec3& origin);
std::vector<double> spectral_grid(const std::vector<SpectralPoint>& pts, const LinearOptions& opt);
std::vector<double> density_grid(const std::vector<DensityPoint>& pts, const LinearOptions& opt);
std::vector<RateResult> rate_grid(const std::vector<RatePoint>& pts, const LinearOptions& opt);
SpinningGrid spinning_grid(const std::vector<double>& u, int m_lo, int m_hi, int ell,
                           const SpinningOptions& opt);
std::vector<SpectralWeight> spinning_weights(const std::vector<double>& u, int ell, int m_max,
                                             const SpinningOptions& opt);

}  // namespace serial

namespace omp {

double af_sum(const Vec3& dk, const CubicLattice& g, const Vec3& origin);
std::vector<double> spectral_grid(const std::vector<SpectralPoint>& pts, const LinearOptions& opt);
std::vector<double> density_grid(const std::vector<DensityPoint>& pts, const LinearOptions& opt);
std::vector<RateResult> rate_grid(const std::vector<RatePoint>& pts, const LinearOptions& opt);
SpinningGrid spinning_grid(const std::vector<double>& u, int m_lo, int m_hi, int ell,
                           const SpinningOptions& opt);
std::vector<SpectralWeight> spinning_weights(const std::vector<double>& u, int ell, int m_max,
                                             const SpinningOptions& opt);

}  // namespace omp

/// Sets the OpenMP team size used by omp:: kernels (n >= 1).
void set_thread_count(int n);
int thread_count();
int available_cores();

}  // namespace stdce
