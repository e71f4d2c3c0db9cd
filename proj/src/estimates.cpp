// SPDX-License-Identifier: Apache-2.0
#include "stdce/estimates.hpp"

#include <cmath>

#include "stdce/core_params.hpp"
#include "stdce/errors.hpp"
#include "stdce/linear_emission.hpp"

namespace stdce {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ParameterError(std::string(what) + " must be positive");
}

void require_non_negative(double v, const char* what)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ParameterError(std::string(what) + " must be non-negative");
}

}  // namespace

double mirror_rate(double area, double omega, double delta)
{
    require_positive(area, "area");
    require_positive(omega, "modulation frequency");
    require_non_negative(delta, "amplitude");
    const double c = kSpeedOfLight;
    const double two_pi = 2.0 * kPi;
    // Omega^5/c^4 = Omega (Omega/c)^4
    return area * std::pow(omega / c, 4) * omega * delta * delta / (15.0 * two_pi * two_pi);
}

double metamirror_coefficient()
{
    static const double coefficient = [] {
        LinearOptions opt;
        opt.tolerance = 1e-9;
        return total_rate_sum(0.0, opt).value;
    }();
    return coefficient;
}

double metamirror_rate(double area, double density, double alpha0, double omega, double delta)
{
    require_non_negative(delta, "amplitude");
    if (delta == 0.0)
        return 0.0;
    ModulationSpec spec;
    spec.omega_mod = omega;
    spec.amplitude = delta;
    AtomicSpecies atom{alpha0};
    return metamirror_coefficient() * norm_gamma0(spec, density, atom, area);
}

double waveguide_rate(double omega, double v_eff_over_c)
{
    require_positive(omega, "modulation frequency");
    if (!(v_eff_over_c >= 0.0 && v_eff_over_c < 1.0))
        throw ParameterError("effective mirror velocity must satisfy 0 <= v/c < 1");
    return omega / (12.0 * kPi) * v_eff_over_c * v_eff_over_c;
}

AcousticBound acoustic_bound(double sound_speed, double omega_w)
{
    require_positive(sound_speed, "sound speed");
    require_positive(omega_w, "acoustic frequency");
    AcousticBound b;
    b.v_max = kMaxRelativeDeformation * sound_speed;
    b.delta_max = b.v_max / omega_w;
    return b;
}

const char* to_string(ScenarioKind k)
{
    switch (k) {
    case ScenarioKind::PerfectMirror: return "PerfectMirror";
    case ScenarioKind::MetaMirror: return "MetaMirror";
    case ScenarioKind::Waveguide1D: return "Waveguide1D";
    }
    return "?";
}

namespace {

ScenarioKind kind_from_string(const std::string& s)
{
    if (s == "PerfectMirror") return ScenarioKind::PerfectMirror;
    if (s == "MetaMirror") return ScenarioKind::MetaMirror;
    if (s == "Waveguide1D") return ScenarioKind::Waveguide1D;
    throw ParameterError("unknown scenario kind '" + s + "'");
}

double need(const std::optional<double>& v, const char* what, const std::string& name)
{
    if (!v)
        throw ParameterError("scenario '" + name + "' is missing " + what);
    return *v;
}

}  // namespace

void validate(const Scenario& s)
{
    switch (s.kind) {
    case ScenarioKind::PerfectMirror:
        require_positive(need(s.area, "area", s.name), "area");
        require_positive(need(s.omega, "omega", s.name), "omega");
        require_positive(need(s.delta, "delta", s.name), "delta");
        break;
    case ScenarioKind::MetaMirror:
        require_positive(need(s.area, "area", s.name), "area");
        require_positive(need(s.omega, "omega", s.name), "omega");
        require_positive(need(s.delta, "delta", s.name), "delta");
        require_positive(need(s.alpha0, "alpha0", s.name), "alpha0");
        require_positive(need(s.density, "density", s.name), "density");
        break;
    case ScenarioKind::Waveguide1D:
        require_positive(need(s.omega, "omega", s.name), "omega");
        require_positive(need(s.v_eff_over_c, "v_eff_over_c", s.name), "v_eff_over_c");
        break;
    }
}

ScenarioResult evaluate(const Scenario& s)
{
    validate(s);
    ScenarioResult r;
    r.name = s.name;
    r.kind = s.kind;
    switch (s.kind) {
    case ScenarioKind::PerfectMirror:
        r.rate = mirror_rate(*s.area, *s.omega, *s.delta);
        break;
    case ScenarioKind::MetaMirror:
        r.rate = metamirror_rate(*s.area, *s.density, *s.alpha0, *s.omega, *s.delta);
        break;
    case ScenarioKind::Waveguide1D:
        r.rate = waveguide_rate(*s.omega, *s.v_eff_over_c);
        break;
    }
    r.log10_rate = std::log10(r.rate);
    return r;
}

std::vector<Scenario> builtin_scenarios()
{
    const double two_pi = 2.0 * kPi;
    Scenario mirror;
    mirror.name = "mirror";
    mirror.kind = ScenarioKind::PerfectMirror;
    mirror.area = 1e-4;
    mirror.omega = two_pi * 1e6;
    mirror.delta = 100e-9;

    Scenario rb;
    rb.name = "rb87";
    rb.kind = ScenarioKind::MetaMirror;
    rb.area = 50e-12;
    rb.density = 4e12;
    rb.alpha0 = 5.9e-28;
    rb.omega = two_pi * 1e4;
    rb.delta = 100e-9;
    rb.spacing = 532e-9;

    Scenario wg;
    wg.name = "waveguide";
    wg.kind = ScenarioKind::Waveguide1D;
    wg.omega = two_pi * 11e9;
    wg.v_eff_over_c = 0.05;
    return {mirror, rb, wg};
}

std::optional<Scenario> find_builtin(const std::string& name)
{
    for (auto& s : builtin_scenarios())
        if (s.name == name)
            return s;
    return std::nullopt;
}

Scenario scenario_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParameterError("scenario must be a JSON object");
    Scenario s;
    s.name = j.value("name", std::string("custom"));
    s.kind = kind_from_string(j.at("kind").get<std::string>());
    auto opt = [&](const char* key, std::optional<double>& dst) {
        if (j.contains(key)) {
            if (!j.at(key).is_number())
                throw ParameterError(std::string("scenario field '") + key + "' must be a number");
            dst = j.at(key).get<double>();
        }
    };
    opt("area", s.area);
    opt("omega", s.omega);
    opt("delta", s.delta);
    opt("alpha0", s.alpha0);
    opt("density", s.density);
    opt("v_eff_over_c", s.v_eff_over_c);
    opt("spacing", s.spacing);
    validate(s);
    return s;
}

nlohmann::json scenario_to_json(const Scenario& s)
{
    nlohmann::json j;
    j["name"] = s.name;
    j["kind"] = to_string(s.kind);
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v)
            j[key] = *v;
    };
    put("area", s.area);
    put("omega", s.omega);
    put("delta", s.delta);
    put("alpha0", s.alpha0);
    put("density", s.density);
    put("v_eff_over_c", s.v_eff_over_c);
    put("spacing", s.spacing);
    return j;
}

}  // namespace stdce
