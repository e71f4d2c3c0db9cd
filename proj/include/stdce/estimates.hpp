// SPDX-License-Identifier: Apache-2.0
//
// Order-of-magnitude pair-creation rates in SI units.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stdce {

/// Oscillating perfect mirror: A Omega^5 Delta^2 / (15 (2 pi)^2 c^4).
double mirror_rate(double area, double omega, double delta);

/// Gamma0 times the zero-kick coefficient: the linear-phase total rate at
/// beta = 0 (computed, not tabulated).
double metamirror_rate(double area, double density, double alpha0, double omega, double delta);

/// Coefficient Gamma(beta = 0) / Gamma0 from the linear-emission module,
/// computed once per process.
double metamirror_coefficient();

/// Superconducting-waveguide analog: (Omega / 12 pi) (v_eff/c)^2.
double waveguide_rate(double omega, double v_eff_over_c);

inline constexpr double kMaxRelativeDeformation = 1e-2;

struct AcousticBound {
    double delta_max = 0.0;  // m
    double v_max = 0.0;      // m/s
};

/// Delta_max = delta v_s / omega_w and v_max = delta v_s, delta = 1e-2.
AcousticBound acoustic_bound(double sound_speed, double omega_w);

enum class ScenarioKind { PerfectMirror, MetaMirror, Waveguide1D };

const char* to_string(ScenarioKind k);

struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::PerfectMirror;
    std::optional<double> area;          // m^2
    std::optional<double> omega;         // rad/s
    std::optional<double> delta;         // m
    std::optional<double> alpha0;        // m^3
    std::optional<double> density;       // m^-2
    std::optional<double> v_eff_over_c;
    std::optional<double> spacing;       // m, informational
};

struct ScenarioResult {
    std::string name;
    ScenarioKind kind;
    double rate = 0.0;  // photons/s
    double log10_rate = 0.0;
};

/// Throws ParameterError when a parameter required by the kind is missing
/// or non-positive.
void validate(const Scenario& s);
ScenarioResult evaluate(const Scenario& s);

/// The three scenarios of the discussion: 1 cm^2 mirror at 1 MHz, Rb-87
/// meta-mirror at 10 kHz, 11 GHz superconducting waveguide.
std::vector<Scenario> builtin_scenarios();
std::optional<Scenario> find_builtin(const std::string& name);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

}  // namespace stdce
