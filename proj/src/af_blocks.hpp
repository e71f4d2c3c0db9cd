// SPDX-License-Identifier: Apache-2.0
//
// Fixed partition of the atom sum shared by the serial and OpenMP kernels, so
// both add the same numbers in the same order.
#pragma once

#include <complex>
#include <vector>

#include "stdce/core_params.hpp"

namespace stdce::detail {

inline constexpr long long kAtomBlock = 256;

inline long long atom_count(const CubicLattice& g)
{
    return static_cast<long long>(g.nx) * g.ny * g.nz;
}

inline long long block_count(const CubicLattice& g)
{
    return (atom_count(g) + kAtomBlock - 1) / kAtomBlock;
}

// Sequential sum of exp(i dk . R_j) over atoms [b*kAtomBlock, (b+1)*kAtomBlock).
inline std::complex<double> atom_block_sum(const Vec3& dk, const CubicLattice& g,
                                           const Vec3& origin, long long b)
{
    const long long n = atom_count(g);
    const long long lo = b * kAtomBlock;
    const long long hi = std::min(n, lo + kAtomBlock);
    double re = 0.0, im = 0.0;
    for (long long j = lo; j < hi; ++j) {
        const long long mx = j % g.nx + 1;
        const long long my = (j / g.nx) % g.ny + 1;
        const long long mz = j / (static_cast<long long>(g.nx) * g.ny) + 1;
        const double phase = dk[0] * (origin[0] + g.spacing * mx) +
                             dk[1] * (origin[1] + g.spacing * my) +
                             dk[2] * (origin[2] + g.spacing * mz);
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return {re, im};
}

// In-place pairwise tree: (0,1),(2,3),... then repeat on the partial sums.
inline std::complex<double> pairwise_reduce(std::vector<std::complex<double>> v)
{
    if (v.empty())
        return 0.0;
    while (v.size() > 1) {
        std::size_t half = (v.size() + 1) / 2;
        for (std::size_t i = 0; i < v.size() / 2; ++i)
            v[i] = v[2 * i] + v[2 * i + 1];
        if (v.size() % 2 == 1)
            v[v.size() / 2] = v.back();
        v.resize(half);
    }
    return v[0];
}

}  // namespace stdce::detail
