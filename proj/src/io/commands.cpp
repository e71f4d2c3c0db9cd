// SPDX-License-Identifier: Apache-2.0
#include "stdce/io/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "stdce/core_params.hpp"
#include "stdce/emission_region.hpp"
#include "stdce/errors.hpp"
#include "stdce/estimates.hpp"
#include "stdce/io/svg_plot.hpp"
#include "stdce/kernels.hpp"
#include "stdce/linear_emission.hpp"
#include "stdce/spinning_emission.hpp"

namespace stdce::io {

namespace {

constexpr const char* kDimless = "dimensionless";

ResultTable make_table(const RunConfig& cfg, std::string name, std::vector<Column> cols,
                       const char* normalization)
{
    ResultTable t;
    t.name = std::move(name);
    t.columns = std::move(cols);
    t.metadata["tool"] = kToolName;
    t.metadata["version"] = kToolVersion;
    t.metadata["units"] = "c = Omega = 1: frequencies in Omega, momenta in Omega/c, lengths in c/Omega";
    t.metadata["normalization"] = normalization;
    t.metadata["parameters"] = parameter_echo(cfg);
    return t;
}

LinearOptions linear_options(const RunConfig& cfg)
{
    LinearOptions o;
    o.tolerance = cfg.tolerance;
    return o;
}

ModulationSpec modulation(const PhysicalScales& p)
{
    ModulationSpec m;
    m.omega_mod = p.omega_mod;
    m.amplitude = p.amplitude;
    return m;
}

// Gamma0 of a monolayer patch; needs density and area.
std::optional<double> gamma0_si(const RunConfig& cfg, std::vector<std::string>& warnings,
                                std::optional<double> area = std::nullopt)
{
    if (!cfg.physical)
        return std::nullopt;
    const auto& p = *cfg.physical;
    const double a = area.value_or(p.area);
    if (!(p.density > 0.0) || !(a > 0.0)) {
        warnings.push_back("physical scales lack density or area: SI rate columns omitted");
        return std::nullopt;
    }
    return norm_gamma0(modulation(p), p.density, AtomicSpecies{p.alpha0}, a);
}

void note_amplitude(const RunConfig& cfg, std::vector<std::string>& warnings)
{
    if (!cfg.physical)
        return;
    const auto ctx = to_dimensionless(modulation(*cfg.physical), PeriodicMonolayer{1.0});
    for (const auto& w : ctx.warnings)
        warnings.push_back(w);
}

std::vector<double> sorted_union(std::vector<double> a, const std::vector<double>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

bool contains(const std::vector<double>& v, double x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

CommandOutput cmd_fig2(const RunConfig& cfg)
{
    const auto& p = cfg.fig2;
    CommandOutput out;
    note_amplitude(cfg, out.warnings);
    CubicLattice g{p.nx, p.ny, p.nz, p.length / p.nx};
    std::vector<double> thetas(p.n_theta);
    for (int i = 0; i < p.n_theta; ++i)
        thetas[i] = -kPi + 2.0 * kPi * i / (p.n_theta - 1);

    std::optional<double> r0;
    if (cfg.physical) {
        const auto& ph = *cfg.physical;
        const double unit = kSpeedOfLight / ph.omega_mod;
        CubicLattice si{p.nx, p.ny, p.nz, g.spacing * unit};
        r0 = norm_r0(modulation(ph), si, AtomicSpecies{ph.alpha0});
    }
    std::vector<Column> cols{{"polarization", kDimless},
                             {"kick", "c beta/Omega"},
                             {"theta", "rad"},
                             {"rate", "r0"}};
    if (r0)
        cols.push_back({"rate_si", "1/s"});
    auto t = make_table(cfg, "fig2_lobes", cols,
                        "r0 = alpha0^2 Omega^3 Delta^2 / [16 (2pi)^3 c^2 (Nx Ny Nz)^2]");
    t.metadata["geometry"] = {{"spacing", g.spacing}, {"length_x", g.length_x()},
                              {"length_y", g.length_y()}, {"length_z", g.length_z()}};
    t.metadata["conventions"] =
        "kick along +y, partner photon along +z (k2 = 0), theta measured from +z towards +y, "
        "partner polarization summed";

    for (Polarization pol : {Polarization::TE, Polarization::TM}) {
        for (double b : p.kicks) {
            const auto r = lobes_finite_array(b, p.omega1, pol, g, thetas);
            for (int i = 0; i < p.n_theta; ++i) {
                std::vector<Cell> row{std::string(to_string(pol)), b, thetas[i], r[i]};
                if (r0)
                    row.push_back(r[i] * *r0);
                t.add_row(std::move(row));
            }
        }
    }

    // Polar lobes drawn in the yz plane.
    std::vector<Series> series;
    for (Polarization pol : {Polarization::TE, Polarization::TM})
        for (double b : p.kicks) {
            Series s;
            s.label = std::string(to_string(pol)) + " kick " + format_real(b).substr(0, 6);
            const auto r = lobes_finite_array(b, p.omega1, pol, g, thetas);
            for (int i = 0; i < p.n_theta; ++i) {
                s.x.push_back(r[i] * std::sin(thetas[i]));
                s.y.push_back(r[i] * std::cos(thetas[i]));
            }
            series.push_back(std::move(s));
        }
    out.plots.push_back({"fig2_lobes", line_plot({"Emission lobes (yz plane)", "y component [r0]",
                                                  "z component [r0]"},
                                                 series)});
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_fig3(const RunConfig& cfg)
{
    const auto& p = cfg.fig3;
    CommandOutput out;
    const auto opt = linear_options(cfg);
    auto t = make_table(cfg, "fig3_density",
                        {{"role", kDimless},
                         {"omega", "Omega"},
                         {"kick", "c beta/Omega"},
                         {"theta", "rad"},
                         {"phi", "rad"},
                         {"f_TE", kDimless},
                         {"f_TM", kDimless},
                         {"allowed", kDimless}},
                        "f = omega1 (Omega - omega1)^2 / (Omega^2 c |k2z|) sum AF2 W^2, zeta1 = +1");
    t.metadata["conventions"] = "kick along +x; zeta1 = -1 gives the same density for a monolayer";

    nlohmann::ordered_json transitions = nlohmann::ordered_json::object();
    for (PhotonRole role : {PhotonRole::High, PhotonRole::Low}) {
        const double w = role == PhotonRole::High ? p.omega_high : 1.0 - p.omega_high;
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : critical_kicks(w, role))
            list.push_back({{"kind", to_string(c.kind)}, {"kick", c.beta}});
        transitions[to_string(role)] = {{"omega", w}, {"critical_kicks", list}};
    }
    t.metadata["region_transitions"] = transitions;

    std::vector<DensityPoint> pts;
    struct Key {
        PhotonRole role;
        double omega, kick, theta, phi;
        bool allowed;
    };
    std::vector<Key> keys;
    for (PhotonRole role : {PhotonRole::High, PhotonRole::Low}) {
        const double w = role == PhotonRole::High ? p.omega_high : 1.0 - p.omega_high;
        for (double b : p.kicks)
            for (int i = 0; i < p.n_theta; ++i) {
                const double th = 0.5 * kPi * i / (p.n_theta - 1);
                for (int j = 0; j < p.n_phi; ++j) {
                    const double ph = 2.0 * kPi * j / (p.n_phi - 1);
                    const Vec2 k1{w * std::sin(th) * std::cos(ph), w * std::sin(th) * std::sin(ph)};
                    const bool allowed = !partner(k1, w, Vec2{b, 0.0}).evanescent;
                    keys.push_back({role, w, b, th, ph, allowed});
                    for (Polarization pol : {Polarization::TE, Polarization::TM})
                        pts.push_back({th, ph, w, Vec2{b, 0.0}, pol, 1});
                }
            }
    }
    const auto f = omp::density_grid(pts, opt);
    for (std::size_t k = 0; k < keys.size(); ++k) {
        const auto& key = keys[k];
        const double te = key.allowed ? f[2 * k] : 0.0;
        const double tm = key.allowed ? f[2 * k + 1] : 0.0;
        t.add_row({std::string(to_string(key.role)), key.omega, key.kick, key.theta, key.phi, te, tm,
                   key.allowed});
    }
    out.tables.push_back(std::move(t));
    if (std::find(cfg.output.formats.begin(), cfg.output.formats.end(), Format::SVG) !=
        cfg.output.formats.end())
        out.warnings.push_back("fig3: density maps have no SVG rendering; tables only");
    return out;
}

CommandOutput cmd_fig4(const RunConfig& cfg)
{
    const auto& p = cfg.fig4;
    CommandOutput out;
    const auto opt = linear_options(cfg);
    const auto kicks = sorted_union(p.kicks, p.cuts);
    const auto g0 = gamma0_si(cfg, out.warnings);
    std::vector<Column> cols{{"kick", "c beta/Omega"},    {"omega", "Omega"},
                             {"dGamma_TE", "Gamma0/Omega"}, {"dGamma_TM", "Gamma0/Omega"},
                             {"dGamma_sum", "Gamma0/Omega"}, {"cut", kDimless}};
    if (g0)
        cols.push_back({"dGamma_sum_si", "1/s per rad/s"});
    auto t = make_table(cfg, "fig4_spectrum", cols,
                        "Gamma0 = A nS^2 alpha0^2 Omega^7 Delta^2 / [16 (2pi)^3 c^6]");

    std::vector<SpectralPoint> pts;
    for (double b : kicks)
        for (int i = 1; i <= p.n_omega; ++i) {
            const double w = static_cast<double>(i) / (p.n_omega + 1);
            pts.push_back({w, b, Polarization::TE});
            pts.push_back({w, b, Polarization::TM});
        }
    const auto g = omp::spectral_grid(pts, opt);
    std::size_t k = 0;
    for (double b : kicks)
        for (int i = 1; i <= p.n_omega; ++i, k += 2) {
            const double w = pts[k].omega;
            std::vector<Cell> row{b, w, g[k], g[k + 1], g[k] + g[k + 1], contains(p.cuts, b)};
            if (g0)
                row.push_back((g[k] + g[k + 1]) * *g0 / cfg.physical->omega_mod);
            t.add_row(std::move(row));
        }

    for (const char* pol : {"TE", "TM"}) {
        ResultTable cut = t;
        cut.rows.clear();
        for (const auto& row : t.rows)
            if (std::get<bool>(row[5]))
                cut.rows.push_back(row);
        out.plots.push_back({std::string("fig4_cuts_") + pol,
                             line_plot({std::string("Spectral rate cuts, ") + pol, "omega [Omega]",
                                        "dGamma/domega [Gamma0/Omega]"},
                                       series_by_group(cut, "omega", std::string("dGamma_") + pol,
                                                       "kick", "kick "))});
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_fig5(const RunConfig& cfg)
{
    CommandOutput out;
    const auto opt = linear_options(cfg);
    const auto kicks = cfg.fig5.kicks.empty() ? kick_range(0.0, 1.0, 0.05) : cfg.fig5.kicks;
    const auto g0 = gamma0_si(cfg, out.warnings);
    std::vector<Column> cols{{"kick", "c beta/Omega"}, {"Gamma_TE", "Gamma0"},
                             {"Gamma_TM", "Gamma0"},   {"Gamma_RL", "Gamma0"},
                             {"Gamma_total", "Gamma0"}, {"identity_residual", kDimless}};
    if (g0)
        cols.push_back({"Gamma_total_si", "1/s"});
    auto t = make_table(cfg, "fig5_total", cols,
                        "Gamma0 = A nS^2 alpha0^2 Omega^7 Delta^2 / [16 (2pi)^3 c^6]");
    t.metadata["conventions"] =
        "pair rates; Gamma_RL is the rate for one circular polarization (R and L coincide); "
        "identity_residual = Gamma_total / (2 Gamma_RL) - 1";

    std::vector<RatePoint> pts;
    for (double b : kicks)
        for (Polarization pol : {Polarization::TE, Polarization::TM, Polarization::R})
            pts.push_back({b, pol});
    const auto r = omp::rate_grid(pts, opt);
    for (std::size_t i = 0; i < kicks.size(); ++i) {
        const double te = r[3 * i].value, tm = r[3 * i + 1].value, rl = r[3 * i + 2].value;
        const double total = te + tm;
        const double resid = rl > 0.0 ? total / (2.0 * rl) - 1.0 : (total == 0.0 ? 0.0 : INFINITY);
        std::vector<Cell> row{kicks[i], te, tm, rl, total, resid};
        if (g0)
            row.push_back(total * *g0);
        t.add_row(std::move(row));
    }

    std::vector<Series> series;
    for (const char* c : {"Gamma_TE", "Gamma_TM", "Gamma_RL", "Gamma_total"}) {
        auto s = series_by_group(t, "kick", c);
        s[0].label = c;
        series.push_back(std::move(s[0]));
    }
    out.plots.push_back({"fig5_total", line_plot({"Total pair rate", "c beta / Omega",
                                                  "Gamma [Gamma0]"},
                                                 series)});
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_spinning(const RunConfig& cfg)
{
    const auto& p = cfg.spinning;
    CommandOutput out;
    SpinningOptions opt;
    opt.R = p.radius;
    opt.n_theta = p.n_theta;
    opt.n_radial = p.n_radial;
    const int m_max = p.m_max < 0 ? default_m_max(p.radius, p.ell) : p.m_max;
    const auto nodes = spinning_frequency_nodes(p.n_omega);
    const auto w = omp::spinning_weights(nodes, p.ell, m_max, opt);
    const auto rate = spinning_rate_from_weights(p.ell, p.radius, w);

    const char* norm = "Gamma0 = A nS^2 alpha0^2 Omega^7 Delta^2 / [16 (2pi)^3 c^6], A = pi R^2";
    auto tf = make_table(cfg, "spinning_f",
                         {{"omega", "Omega"},
                          {"m", kDimless},
                          {"m2", kDimless},
                          {"m1_plus_m2", kDimless},
                          {"f", kDimless}},
                         norm);
    tf.metadata["nodes"] = {{"theta", opt.theta_nodes()}, {"radial", opt.radial_nodes()},
                            {"m_max", m_max}};
    for (const auto& s : w)
        for (int m = s.m_lo; m <= s.m_hi; ++m)
            tf.add_row({s.u, static_cast<long long>(m), static_cast<long long>(p.ell - m),
                        static_cast<long long>(p.ell), s.per_m[m - s.m_lo]});

    auto ts = make_table(cfg, "spinning_spectrum",
                         {{"omega", "Omega"},
                          {"dGamma", "Gamma0/Omega"},
                          {"m_lo", kDimless},
                          {"m_hi", kDimless},
                          {"tail_fraction", kDimless},
                          {"converged", kDimless}},
                         norm);
    for (const auto& s : w)
        ts.add_row({s.u, s.density, static_cast<long long>(s.m_lo), static_cast<long long>(s.m_hi),
                    s.tail_fraction, s.converged});

    std::optional<double> g0;
    if (cfg.physical) {
        const double R_si = p.radius * kSpeedOfLight / cfg.physical->omega_mod;
        g0 = gamma0_si(cfg, out.warnings, kPi * R_si * R_si);
    }
    std::vector<Column> cols{{"ell", kDimless},      {"radius", "c/Omega"},
                             {"Gamma_ell", "Gamma0"}, {"max_tail_fraction", kDimless},
                             {"converged", kDimless}};
    if (g0)
        cols.push_back({"Gamma_ell_si", "1/s"});
    auto tr = make_table(cfg, "spinning_rate", cols, norm);
    std::vector<Cell> row{static_cast<long long>(p.ell), p.radius, rate.value, rate.max_tail,
                          rate.converged};
    if (g0)
        row.push_back(rate.value * *g0);
    tr.add_row(std::move(row));
    if (!rate.converged)
        out.warnings.push_back("spinning: m window hit its cap before the tail criterion held");

    Series s{"ell " + std::to_string(p.ell), rate.u, rate.density};
    out.plots.push_back({"spinning_spectrum",
                         line_plot({"Spinning-phase spectrum", "omega [Omega]",
                                    "dGamma/domega [Gamma0/Omega]"},
                                   {s})});
    out.tables.push_back(std::move(tf));
    out.tables.push_back(std::move(ts));
    out.tables.push_back(std::move(tr));
    return out;
}

CommandOutput cmd_estimate(const RunConfig& cfg)
{
    CommandOutput out;
    auto t = make_table(cfg, "estimates",
                        {{"scenario", kDimless},
                         {"kind", kDimless},
                         {"rate", "photons/s"},
                         {"log10_rate", kDimless}},
                        "SI");
    t.metadata["metamirror_coefficient"] = metamirror_coefficient();
    std::vector<Scenario> all;
    for (const auto& name : cfg.estimate.scenarios)
        all.push_back(*find_builtin(name));
    for (const auto& s : cfg.estimate.custom)
        all.push_back(s);
    auto list = nlohmann::ordered_json::array();
    for (const auto& s : all) {
        const auto r = evaluate(s);
        t.add_row({r.name, std::string(to_string(r.kind)), r.rate, r.log10_rate});
        list.push_back(nlohmann::ordered_json::parse(scenario_to_json(s).dump()));
    }
    t.metadata["scenarios"] = list;
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput run_command(const RunConfig& cfg)
{
    validate(cfg);
    const auto& c = cfg.command;
    if (c == "fig2") return cmd_fig2(cfg);
    if (c == "fig3") return cmd_fig3(cfg);
    if (c == "fig4") return cmd_fig4(cfg);
    if (c == "fig5") return cmd_fig5(cfg);
    if (c == "spinning") return cmd_spinning(cfg);
    if (c == "estimate") return cmd_estimate(cfg);
    throw ParameterError("unknown command '" + c + "'");
}

int resolve_thread_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("STDCE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0 && n < 4096)
            return static_cast<int>(n);
    }
    return std::max(1, available_cores());
}

std::vector<std::filesystem::path> write_outputs(const CommandOutput& out, const RunConfig& cfg,
                                                 double wall_seconds, int threads)
{
    std::vector<std::filesystem::path> written;
    const auto& dir = cfg.output.dir;
    std::filesystem::create_directories(dir);
    auto has = [&](Format f) {
        return std::find(cfg.output.formats.begin(), cfg.output.formats.end(), f) !=
               cfg.output.formats.end();
    };
    for (const auto& t : out.tables) {
        if (has(Format::CSV)) {
            written.push_back(dir / (t.name + ".csv"));
            write_file(written.back(), to_csv(t));
        }
        if (has(Format::JSON)) {
            written.push_back(dir / (t.name + ".json"));
            write_file(written.back(), to_json(t));
        }
    }
    if (has(Format::SVG))
        for (const auto& p : out.plots) {
            written.push_back(dir / (p.name + ".svg"));
            write_file(written.back(), p.svg);
        }
    nlohmann::ordered_json run;
    run["tool"] = kToolName;
    run["version"] = kToolVersion;
    run["command"] = cfg.command;
    run["wall_time_s"] = wall_seconds;
    run["threads"] = threads;
    run["warnings"] = out.warnings;
    auto files = nlohmann::ordered_json::array();
    for (const auto& f : written)
        files.push_back(f.filename().string());
    run["files"] = files;
    const auto run_path = dir / (cfg.command + ".run.json");
    write_file(run_path, run.dump(2) + "\n");
    written.push_back(run_path);
    return written;
}

}  // namespace stdce::io
