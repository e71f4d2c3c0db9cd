// SPDX-License-Identifier: Apache-2.0
//
// Figure and estimate commands. Each returns result tables (and optional
// plots); nothing is written until write_outputs.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stdce/io/result_table.hpp"
#include "stdce/io/run_config.hpp"

namespace stdce::io {

inline constexpr const char* kToolName = "stdce";
inline constexpr const char* kToolVersion = "1.0.0";

struct Plot {
    std::string name;
    std::string svg;
};

struct CommandOutput {
    std::vector<ResultTable> tables;
    std::vector<Plot> plots;
    std::vector<std::string> warnings;
};

/// Finite-array lobes in the yz plane, kick along y, partner along +z.
CommandOutput cmd_fig2(const RunConfig& cfg);
/// Angular densities of the high- and low-frequency photon, kick along x.
CommandOutput cmd_fig3(const RunConfig& cfg);
/// Spectral rates on a (kick, omega) grid with the cut kicks flagged.
CommandOutput cmd_fig4(const RunConfig& cfg);
/// Total rates per polarization against the kick.
CommandOutput cmd_fig5(const RunConfig& cfg);
/// f_ell(omega, m), the spectral density and Gamma_ell for a spinning phase.
CommandOutput cmd_spinning(const RunConfig& cfg);
/// Order-of-magnitude scenarios.
CommandOutput cmd_estimate(const RunConfig& cfg);

/// Validates cfg and dispatches on cfg.command.
CommandOutput run_command(const RunConfig& cfg);

/// Thread count: requested if > 0, else STDCE_THREADS if set and valid,
/// else the number of available cores.
int resolve_thread_count(int requested);

/// Writes every table in the selected formats and every plot when SVG is
/// selected, then <command>.run.json with wall time and thread count (the
/// only non-deterministic file). Returns the paths written.
std::vector<std::filesystem::path> write_outputs(const CommandOutput& out, const RunConfig& cfg,
                                                 double wall_seconds, int threads);

}  // namespace stdce::io
