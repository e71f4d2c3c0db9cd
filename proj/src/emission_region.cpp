// SPDX-License-Identifier: Apache-2.0
#include "stdce/emission_region.hpp"

#include <algorithm>
#include <cmath>

#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"

namespace stdce {

const char* to_string(PhotonRole r)
{
    return r == PhotonRole::High ? "high" : "low";
}

const char* to_string(RegionTransition t)
{
    switch (t) {
    case RegionTransition::NormalExcluded: return "normal_excluded";
    case RegionTransition::GrazingContact: return "grazing_contact";
    case RegionTransition::GrazingLost: return "grazing_lost";
    case RegionTransition::ForbiddenOnset: return "forbidden_onset";
    case RegionTransition::Collapse: return "collapse";
    }
    return "?";
}

EmissionRegion emission_region(double omega, double beta, PhotonRole role, int n_phi)
{
    if (!(omega > 0.0 && omega < 1.0))
        throw ParameterError("photon frequency must lie in (0, Omega)");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw ParameterError("kick magnitude must be finite and non-negative");
    if (n_phi < 2)
        throw ParameterError("need at least two azimuths");

    EmissionRegion reg;
    reg.omega = omega;
    reg.beta = beta;
    reg.role = role;
    const double u = omega;
    const double v = 1.0 - omega;

    bool any = false, normal = false, grazing = false, full = true;
    reg.slices.reserve(n_phi);
    for (int i = 0; i < n_phi; ++i) {
        const double phi = (i == n_phi - 1) ? kPi : kPi * i / (n_phi - 1);
        // cos(pi) is not exactly -1 in floating point; pin both ends.
        const double c = (i == 0) ? 1.0 : (i == n_phi - 1 ? -1.0 : std::cos(phi));
        const double sn = (i == 0 || i == n_phi - 1) ? 0.0 : std::sin(phi);
        RegionSlice sl;
        sl.phi = phi;
        const double disc = v * v - beta * beta * sn * sn;
        if (disc >= 0.0) {
            const double r = std::sqrt(disc);
            const double sm = (beta * c - r) / u;
            const double sp = (beta * c + r) / u;
            sl.s_lo = std::max(0.0, sm);
            sl.s_hi = std::min(1.0, sp);
            sl.allowed = sl.s_hi >= sl.s_lo;
            if (sl.allowed) {
                any = true;
                if (sm <= 0.0)
                    normal = true;
                if (sp >= 1.0)
                    grazing = true;
            }
            if (!(sl.allowed && sm <= 0.0 && sp >= 1.0))
                full = false;
        }
        else {
            full = false;
        }
        reg.slices.push_back(sl);
    }
    reg.empty = !any;
    reg.contains_normal = normal;
    reg.touches_grazing = grazing;
    reg.fully_allowed = any && full;
    reg.island = any && !normal && !grazing;
    return reg;
}

namespace {

struct Flags {
    bool nonempty, normal, grazing, full;
};

Flags flags_at(double omega, double beta, PhotonRole role, int n_phi)
{
    const auto r = emission_region(omega, beta, role, n_phi);
    return {!r.empty, r.contains_normal, r.touches_grazing, r.fully_allowed};
}

template <class Pred>
double bisect(double lo, double hi, Pred&& pred, double tol)
{
    const bool plo = pred(lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) == plo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<CriticalKick> critical_kicks(double omega, PhotonRole role, double beta_max,
                                         double tol, int n_phi)
{
    if (!(beta_max > 0.0))
        throw ParameterError("beta_max must be positive");
    std::vector<CriticalKick> out;
    const int steps = static_cast<int>(std::ceil(beta_max / 0.01));
    Flags prev = flags_at(omega, 0.0, role, n_phi);
    double bprev = 0.0;
    for (int i = 1; i <= steps; ++i) {
        const double b = std::min(beta_max, i * 0.01);
        const Flags cur = flags_at(omega, b, role, n_phi);
        auto locate = [&](auto member) {
            return bisect(
                bprev, b, [&](double x) { return flags_at(omega, x, role, n_phi).*member; },
                tol);
        };
        if (prev.normal && !cur.normal)
            out.push_back({RegionTransition::NormalExcluded, locate(&Flags::normal)});
        if (!prev.grazing && cur.grazing)
            out.push_back({RegionTransition::GrazingContact, locate(&Flags::grazing)});
        if (prev.grazing && !cur.grazing && cur.nonempty)
            out.push_back({RegionTransition::GrazingLost, locate(&Flags::grazing)});
        if (prev.full && !cur.full)
            out.push_back({RegionTransition::ForbiddenOnset, locate(&Flags::full)});
        if (prev.nonempty && !cur.nonempty)
            out.push_back({RegionTransition::Collapse, locate(&Flags::nonempty)});
        prev = cur;
        bprev = b;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CriticalKick& a, const CriticalKick& b) { return a.beta < b.beta; });
    return out;
}

}  // namespace stdce
