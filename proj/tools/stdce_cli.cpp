// SPDX-License-Identifier: Apache-2.0
//
// stdce: figure tables, spinning spectra and rate estimates from the command
// line. Exit codes: 0 success, 2 usage or configuration error, 3 numerical
// non-convergence.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stdce/errors.hpp"
#include "stdce/io/commands.hpp"
#include "stdce/kernels.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Overrides {
    std::string config;
    std::string out;
    std::vector<std::string> formats;
    std::optional<int> threads;
    std::optional<double> tolerance;
    std::vector<double> kicks;
    std::optional<double> omega_ratio;
    std::optional<double> radius;
    std::optional<int> ell;
    std::optional<int> m_max;
    std::optional<int> n_omega;
    std::vector<std::string> scenarios;
};

void add_common(CLI::App* sub, Overrides& o)
{
    sub->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--format", o.formats, "output formats: csv, json, svg")->delimiter(',');
    sub->add_option("--threads", o.threads, "OpenMP threads (overrides STDCE_THREADS)");
    sub->add_option("--tolerance", o.tolerance, "relative quadrature tolerance in (0, 1e-2]");
}

void add_kicks(CLI::App* sub, Overrides& o)
{
    sub->add_option("--kick", o.kicks, "kicks c beta / Omega (comma separated)")->delimiter(',');
}

stdce::io::RunConfig build_config(const std::string& command, const Overrides& o)
{
    using namespace stdce::io;
    RunConfig cfg;
    if (!o.config.empty())
        cfg = load_config(o.config);
    if (!cfg.command.empty() && cfg.command != command)
        throw stdce::ParameterError("config is for command '" + cfg.command + "', not '" +
                                    command + "'");
    cfg.command = command;
    if (!o.out.empty())
        cfg.output.dir = o.out;
    if (!o.formats.empty()) {
        cfg.output.formats.clear();
        for (const auto& f : o.formats)
            cfg.output.formats.push_back(format_from_string(f));
    }
    if (o.threads)
        cfg.threads = *o.threads;
    if (o.tolerance)
        cfg.tolerance = *o.tolerance;
    if (!o.kicks.empty()) {
        cfg.fig2.kicks = o.kicks;
        cfg.fig3.kicks = o.kicks;
        cfg.fig4.kicks = o.kicks;
        cfg.fig5.kicks = o.kicks;
    }
    if (o.omega_ratio) {
        cfg.fig2.omega1 = *o.omega_ratio;
        cfg.fig3.omega_high = *o.omega_ratio;
    }
    if (o.radius)
        cfg.spinning.radius = *o.radius;
    if (o.ell)
        cfg.spinning.ell = *o.ell;
    if (o.m_max)
        cfg.spinning.m_max = *o.m_max;
    if (o.n_omega) {
        cfg.fig4.n_omega = *o.n_omega;
        cfg.spinning.n_omega = *o.n_omega;
    }
    if (!o.scenarios.empty()) {
        cfg.estimate.scenarios = o.scenarios;
        cfg.estimate.custom.clear();
    }
    return cfg;
}

int run(const std::string& command, const Overrides& o)
{
    using namespace stdce::io;
    const RunConfig cfg = build_config(command, o);
    if (cfg.threads < 0)
        throw stdce::ParameterError("--threads must be >= 1");
    const int threads = resolve_thread_count(cfg.threads);
    stdce::set_thread_count(threads);

    const auto t0 = std::chrono::steady_clock::now();
    const CommandOutput out = run_command(cfg);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& w : out.warnings)
        std::cerr << "warning: " << w << '\n';
    for (const auto& p : write_outputs(out, cfg, wall, threads))
        std::cout << p.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dynamical-Casimir photon pairs from modulated atomic arrays"};
    app.set_version_flag("--version", std::string(stdce::io::kToolVersion));
    app.require_subcommand(1);

    Overrides o;
    std::string chosen;
    auto* fig2 = app.add_subcommand("fig2", "finite-array emission lobes in the yz plane");
    auto* fig3 = app.add_subcommand("fig3", "angular densities of both photons vs kick");
    auto* fig4 = app.add_subcommand("fig4", "spectral rates vs frequency and kick");
    auto* fig5 = app.add_subcommand("fig5", "total rates per polarization vs kick");
    auto* spin = app.add_subcommand("spinning", "angular-momentum spectrum of a spinning phase");
    auto* est = app.add_subcommand("estimate", "order-of-magnitude rate scenarios");
    for (auto* sub : {fig2, fig3, fig4, fig5, spin, est}) {
        add_common(sub, o);
        sub->callback([&chosen, sub] { chosen = sub->get_name(); });
    }
    for (auto* sub : {fig2, fig3, fig4, fig5})
        add_kicks(sub, o);
    for (auto* sub : {fig2, fig3})
        sub->add_option("--omega-ratio", o.omega_ratio, "omega1 / Omega of the tracked photon");
    for (auto* sub : {fig4, spin})
        sub->add_option("--n-omega", o.n_omega, "frequency nodes");
    spin->add_option("--radius", o.radius, "disk radius Omega R / c");
    spin->add_option("--ell", o.ell, "topological charge");
    spin->add_option("--m-max", o.m_max, "initial m half-window (-1: default)");
    est->add_option("--scenario", o.scenarios, "built-in scenarios: mirror, rb87, waveguide")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return run(chosen, o);
    }
    catch (const stdce::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const stdce::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const stdce::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        if (!e.diagnostics().empty())
            std::cerr << e.diagnostics() << '\n';
        return kExitNumerical;
    }
    catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
