// SPDX-License-Identifier: Apache-2.0
#include "stdce/io/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "stdce/errors.hpp"

namespace stdce::io {

const char* to_string(Format f)
{
    switch (f) {
    case Format::CSV: return "csv";
    case Format::JSON: return "json";
    case Format::SVG: return "svg";
    }
    return "?";
}

Format format_from_string(const std::string& s)
{
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "csv") return Format::CSV;
    if (t == "json") return Format::JSON;
    if (t == "svg") return Format::SVG;
    throw ParameterError("unknown output format '" + s + "' (csv, json, svg)");
}

std::vector<double> kick_range(double lo, double hi, double step)
{
    if (!(step > 0.0) || !(hi >= lo))
        throw ParameterError("kick range needs hi >= lo and step > 0");
    const long n = std::lround((hi - lo) / step);
    std::vector<double> out;
    for (long i = 0; i <= n; ++i)
        out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where)
{
    if (!j.is_object())
        throw ParameterError("'" + where + "' must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParameterError("unknown key '" + it.key() + "' in " + where);
}

template <class T>
void read(const json& j, const char* key, T& dst, const std::string& where)
{
    if (!j.contains(key))
        return;
    try {
        dst = j.at(key).get<T>();
    }
    catch (const json::exception&) {
        throw ParameterError(std::string("bad value for '") + key + "' in " + where);
    }
}

}  // namespace

RunConfig config_from_json(const json& j, RunConfig cfg)
{
    check_keys(j,
               {"command", "output", "threads", "tolerance", "physical", "fig2", "fig3", "fig4",
                "fig5", "spinning", "estimate"},
               "config");
    read(j, "command", cfg.command, "config");
    read(j, "threads", cfg.threads, "config");
    read(j, "tolerance", cfg.tolerance, "config");
    if (j.contains("output")) {
        const auto& o = j.at("output");
        check_keys(o, {"dir", "formats"}, "output");
        std::string dir = cfg.output.dir.string();
        read(o, "dir", dir, "output");
        cfg.output.dir = dir;
        if (o.contains("formats")) {
            std::vector<std::string> f;
            read(o, "formats", f, "output");
            cfg.output.formats.clear();
            for (const auto& s : f)
                cfg.output.formats.push_back(format_from_string(s));
        }
    }
    if (j.contains("physical")) {
        const auto& p = j.at("physical");
        check_keys(p, {"omega_mod", "amplitude", "alpha0", "density", "area"}, "physical");
        PhysicalScales s = cfg.physical.value_or(PhysicalScales{});
        read(p, "omega_mod", s.omega_mod, "physical");
        read(p, "amplitude", s.amplitude, "physical");
        read(p, "alpha0", s.alpha0, "physical");
        read(p, "density", s.density, "physical");
        read(p, "area", s.area, "physical");
        cfg.physical = s;
    }
    if (j.contains("fig2")) {
        const auto& p = j.at("fig2");
        check_keys(p, {"nx", "ny", "nz", "length", "omega1", "kicks", "n_theta"}, "fig2");
        read(p, "nx", cfg.fig2.nx, "fig2");
        read(p, "ny", cfg.fig2.ny, "fig2");
        read(p, "nz", cfg.fig2.nz, "fig2");
        read(p, "length", cfg.fig2.length, "fig2");
        read(p, "omega1", cfg.fig2.omega1, "fig2");
        read(p, "kicks", cfg.fig2.kicks, "fig2");
        read(p, "n_theta", cfg.fig2.n_theta, "fig2");
    }
    if (j.contains("fig3")) {
        const auto& p = j.at("fig3");
        check_keys(p, {"omega_high", "kicks", "n_theta", "n_phi"}, "fig3");
        read(p, "omega_high", cfg.fig3.omega_high, "fig3");
        read(p, "kicks", cfg.fig3.kicks, "fig3");
        read(p, "n_theta", cfg.fig3.n_theta, "fig3");
        read(p, "n_phi", cfg.fig3.n_phi, "fig3");
    }
    if (j.contains("fig4")) {
        const auto& p = j.at("fig4");
        check_keys(p, {"kicks", "cuts", "n_omega"}, "fig4");
        read(p, "kicks", cfg.fig4.kicks, "fig4");
        read(p, "cuts", cfg.fig4.cuts, "fig4");
        read(p, "n_omega", cfg.fig4.n_omega, "fig4");
    }
    if (j.contains("fig5")) {
        const auto& p = j.at("fig5");
        check_keys(p, {"kicks"}, "fig5");
        read(p, "kicks", cfg.fig5.kicks, "fig5");
    }
    if (j.contains("spinning")) {
        const auto& p = j.at("spinning");
        check_keys(p, {"ell", "radius", "m_max", "n_omega", "n_theta", "n_radial"}, "spinning");
        read(p, "ell", cfg.spinning.ell, "spinning");
        read(p, "radius", cfg.spinning.radius, "spinning");
        read(p, "m_max", cfg.spinning.m_max, "spinning");
        read(p, "n_omega", cfg.spinning.n_omega, "spinning");
        read(p, "n_theta", cfg.spinning.n_theta, "spinning");
        read(p, "n_radial", cfg.spinning.n_radial, "spinning");
    }
    if (j.contains("estimate")) {
        const auto& p = j.at("estimate");
        check_keys(p, {"scenarios", "custom"}, "estimate");
        read(p, "scenarios", cfg.estimate.scenarios, "estimate");
        if (p.contains("custom")) {
            if (!p.at("custom").is_array())
                throw ParameterError("'custom' in estimate must be an array of scenarios");
            cfg.estimate.custom.clear();
            for (const auto& s : p.at("custom"))
                cfg.estimate.custom.push_back(scenario_from_json(s));
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base)
{
    std::ifstream f(path);
    if (!f)
        throw ParameterError("cannot open config '" + path.string() + "'");
    json j;
    try {
        j = json::parse(f);
    }
    catch (const json::parse_error& e) {
        throw ParameterError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j, std::move(base));
}

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw ParameterError(msg);
}

void require_kicks(const std::vector<double>& k, const char* where, double bound)
{
    require(!k.empty(), std::string(where) + ": kick grid is empty");
    for (double b : k)
        require(std::isfinite(b) && std::abs(b) <= bound,
                std::string(where) + ": kicks must be finite with |c beta/Omega| <= " +
                    std::to_string(bound));
}

}  // namespace

void validate(const RunConfig& cfg)
{
    const auto& names = command_names();
    require(std::find(names.begin(), names.end(), cfg.command) != names.end(),
            "unknown command '" + cfg.command + "'");
    require(cfg.tolerance > 0.0 && cfg.tolerance <= 1e-2, "tolerance must lie in (0, 1e-2]");
    require(cfg.threads >= 0, "threads must be >= 0");
    require(!cfg.output.formats.empty(), "no output format selected");
    if (cfg.physical) {
        const auto& p = *cfg.physical;
        require(p.omega_mod > 0.0 && p.amplitude >= 0.0 && p.alpha0 > 0.0,
                "physical: omega_mod and alpha0 must be positive, amplitude non-negative");
        require(p.density >= 0.0 && p.area >= 0.0, "physical: density and area must be >= 0");
    }
    const auto& c = cfg.command;
    if (c == "fig2") {
        const auto& p = cfg.fig2;
        require(p.nx >= 1 && p.ny >= 1 && p.nz >= 1, "fig2: atom counts must be >= 1");
        require(p.length > 0.0, "fig2: length must be positive");
        require(p.omega1 > 0.0 && p.omega1 < 1.0, "fig2: omega1 must lie in (0, 1)");
        require(p.n_theta >= 2, "fig2: n_theta must be >= 2");
        require_kicks(p.kicks, "fig2", 1e6);
    }
    else if (c == "fig3") {
        const auto& p = cfg.fig3;
        require(p.omega_high > 0.0 && p.omega_high < 1.0, "fig3: omega_high must lie in (0, 1)");
        require(p.n_theta >= 2 && p.n_phi >= 2, "fig3: n_theta and n_phi must be >= 2");
        require_kicks(p.kicks, "fig3", 1e6);
    }
    else if (c == "fig4") {
        const auto& p = cfg.fig4;
        require(p.n_omega >= 1, "fig4: n_omega must be >= 1");
        require_kicks(p.kicks, "fig4", 1e6);
    }
    else if (c == "fig5") {
        if (!cfg.fig5.kicks.empty())
            require_kicks(cfg.fig5.kicks, "fig5", 1e6);
    }
    else if (c == "spinning") {
        const auto& p = cfg.spinning;
        require(p.radius > 0.0, "spinning: radius must be positive");
        require(p.m_max == -1 || p.m_max >= 2, "spinning: m_max must be >= 2");
        require(p.n_omega >= 2, "spinning: n_omega must be >= 2");
        require(p.n_theta >= 0 && p.n_radial >= 0, "spinning: node counts must be >= 0");
    }
    else if (c == "estimate") {
        require(!cfg.estimate.scenarios.empty() || !cfg.estimate.custom.empty(),
                "estimate: no scenario selected");
        for (const auto& name : cfg.estimate.scenarios)
            require(find_builtin(name).has_value(), "estimate: unknown scenario '" + name + "'");
    }
    std::error_code ec;
    const auto& dir = cfg.output.dir;
    if (!std::filesystem::exists(dir, ec))
        std::filesystem::create_directories(dir, ec);
    require(!ec && std::filesystem::is_directory(dir),
            "output directory '" + dir.string() + "' cannot be created");
    const auto probe = dir / ".stdce_write_probe";
    {
        std::ofstream f(probe);
        require(static_cast<bool>(f), "output directory '" + dir.string() + "' is not writable");
    }
    std::filesystem::remove(probe, ec);
}

nlohmann::ordered_json parameter_echo(const RunConfig& cfg)
{
    nlohmann::ordered_json j;
    j["command"] = cfg.command;
    j["tolerance"] = cfg.tolerance;
    const auto& c = cfg.command;
    if (c == "fig2") {
        const auto& p = cfg.fig2;
        j["nx"] = p.nx;
        j["ny"] = p.ny;
        j["nz"] = p.nz;
        j["length"] = p.length;
        j["omega1"] = p.omega1;
        j["kicks"] = p.kicks;
        j["n_theta"] = p.n_theta;
    }
    else if (c == "fig3") {
        j["omega_high"] = cfg.fig3.omega_high;
        j["kicks"] = cfg.fig3.kicks;
        j["n_theta"] = cfg.fig3.n_theta;
        j["n_phi"] = cfg.fig3.n_phi;
    }
    else if (c == "fig4") {
        j["kicks"] = cfg.fig4.kicks;
        j["cuts"] = cfg.fig4.cuts;
        j["n_omega"] = cfg.fig4.n_omega;
    }
    else if (c == "fig5") {
        j["kicks"] = cfg.fig5.kicks;
    }
    else if (c == "spinning") {
        const auto& p = cfg.spinning;
        j["ell"] = p.ell;
        j["radius"] = p.radius;
        j["m_max"] = p.m_max;
        j["n_omega"] = p.n_omega;
        j["n_theta"] = p.n_theta;
        j["n_radial"] = p.n_radial;
    }
    else if (c == "estimate") {
        j["scenarios"] = cfg.estimate.scenarios;
        auto custom = nlohmann::ordered_json::array();
        for (const auto& s : cfg.estimate.custom)
            custom.push_back(nlohmann::ordered_json::parse(scenario_to_json(s).dump()));
        j["custom"] = custom;
    }
    if (cfg.physical) {
        const auto& p = *cfg.physical;
        j["physical"] = {{"omega_mod", p.omega_mod}, {"amplitude", p.amplitude},
                         {"alpha0", p.alpha0},       {"density", p.density},
                         {"area", p.area}};
    }
    return j;
}

}  // namespace stdce::io
