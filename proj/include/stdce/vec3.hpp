// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "stdce/core_params.hpp"

namespace stdce {

inline double dot(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a)
{
    return std::sqrt(dot(a, a));
}

inline Vec3 scale(const Vec3& a, double s)
{
    return {a[0] * s, a[1] * s, a[2] * s};
}

}  // namespace stdce
