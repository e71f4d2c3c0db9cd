// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: one JSON document, overridden field by field from the
// command line. The schema is documented in docs/config.md.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stdce/estimates.hpp"

namespace stdce::io {

enum class Format { CSV, JSON, SVG };

const char* to_string(Format f);
Format format_from_string(const std::string& s);

struct OutputSpec {
    std::filesystem::path dir = ".";
    std::vector<Format> formats{Format::CSV};
};

/// Optional SI scales. When present, tables gain SI columns next to the
/// normalized ones.
struct PhysicalScales {
    double omega_mod = 0.0;  // rad/s
    double amplitude = 0.0;  // m
    double alpha0 = 0.0;     // m^3
    double density = 0.0;    // atoms / m^2
    double area = 0.0;       // m^2, monolayer rates
};

struct Fig2Params {
    int nx = 50;
    int ny = 50;
    int nz = 1;
    double length = 20.0;  // Lx = Ly in c/Omega
    double omega1 = 0.5;
    std::vector<double> kicks{0.0, 0.1, -0.1, 0.2, -0.2, 0.3, -0.3, 0.4, -0.4};
    int n_theta = 361;     // theta in [-pi, pi]
};

struct Fig3Params {
    double omega_high = 0.7;
    std::vector<double> kicks{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    int n_theta = 46;  // theta in [0, pi/2]
    int n_phi = 73;    // phi in [0, 2 pi]
};

struct Fig4Params {
    std::vector<double> kicks{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
    std::vector<double> cuts{0.0, 0.2, 0.4, 0.6, 0.8, 0.95};
    int n_omega = 99;  // omega = i / (n_omega + 1), i = 1 .. n_omega
};

struct Fig5Params {
    std::vector<double> kicks;  // empty: 0, 0.05, ..., 1
};

struct SpinningParams {
    int ell = 0;
    double radius = 5.0;  // Omega R / c
    int m_max = -1;       // -1: default for the radius
    int n_omega = 24;     // Gauss-Legendre frequency nodes
    int n_theta = 0;      // 0: default for the radius
    int n_radial = 0;
};

struct EstimateParams {
    std::vector<std::string> scenarios{"mirror", "rb87", "waveguide"};
    std::vector<Scenario> custom;
};

struct RunConfig {
    std::string command;
    OutputSpec output;
    int threads = 0;  // 0: STDCE_THREADS, else all cores
    double tolerance = 1e-8;
    std::optional<PhysicalScales> physical;
    Fig2Params fig2;
    Fig3Params fig3;
    Fig4Params fig4;
    Fig5Params fig5;
    SpinningParams spinning;
    EstimateParams estimate;
};

inline const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "spinning",
                                                "estimate"};
    return names;
}

/// Parses a configuration document. Unknown keys are errors so that typos
/// do not silently fall back to defaults. Throws ParameterError.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Checks the invariants for the selected command: tolerance in (0, 1e-2],
/// non-empty grids, output directory writable. Throws ParameterError.
void validate(const RunConfig& cfg);

/// Parameters of the selected command, echoed into table metadata.
nlohmann::ordered_json parameter_echo(const RunConfig& cfg);

/// Kicks 0, step, ..., up to and including hi.
std::vector<double> kick_range(double lo, double hi, double step);

}  // namespace stdce::io
