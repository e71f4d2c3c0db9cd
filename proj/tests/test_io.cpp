// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stdce/errors.hpp"
#include "stdce/io/commands.hpp"
#include "stdce/io/result_table.hpp"
#include "stdce/io/run_config.hpp"
#include "stdce/io/svg_plot.hpp"

using namespace stdce;
using namespace stdce::io;

namespace {

std::filesystem::path scratch_dir(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("stdce_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE("io")
{
    TEST_CASE("real formatting keeps 17 significant digits")
    {
        CHECK(format_real(0.1) == "0.10000000000000001");
        CHECK(format_real(1.0) == "1");
        CHECK(format_real(-2.5e-300) == "-2.5e-300");
        CHECK(format_real(2.0 / 3.0) == "0.66666666666666663");
        CHECK(format_real(NAN) == "nan");
        CHECK(format_real(-INFINITY) == "-inf");
        for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -1e-17})
            CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
    }

    TEST_CASE("CSV layout")
    {
        ResultTable t;
        t.name = "demo";
        t.columns = {{"label", "dimensionless"}, {"rate", "Gamma0"}, {"n", "dimensionless"},
                     {"ok", "dimensionless"}};
        t.add_row({std::string("a,b"), 0.25, 3LL, true});
        t.add_row({std::string("say \"hi\""), -1.0, -7LL, false});
        const std::string csv = to_csv(t);
        CHECK(csv ==
              "label [dimensionless],rate [Gamma0],n [dimensionless],ok [dimensionless]\n"
              "\"a,b\",0.25,3,true\n"
              "\"say \"\"hi\"\"\",-1,-7,false\n");
        CHECK(csv.find('\r') == std::string::npos);
        CHECK_THROWS_AS(t.add_row({1.0}), ParameterError);
        CHECK(t.real(0, "rate") == 0.25);
        CHECK(t.real(1, "n") == -7.0);
        CHECK_THROWS_AS(t.real(0, "label"), ParameterError);
        CHECK_THROWS_AS(t.column_index("missing"), ParameterError);
    }

    TEST_CASE("JSON tables parse back")
    {
        ResultTable t;
        t.name = "demo";
        t.columns = {{"x", "Omega"}, {"y", "Gamma0"}};
        t.metadata["note"] = "value";
        t.add_row({0.1, NAN});
        const auto j = nlohmann::json::parse(to_json(t));
        CHECK(j["name"] == "demo");
        CHECK(j["columns"][1]["unit"] == "Gamma0");
        CHECK(j["metadata"]["note"] == "value");
        CHECK(j["rows"][0][0].get<double>() == 0.1);
        CHECK(j["rows"][0][1].is_null());
    }

    TEST_CASE("configuration parsing")
    {
        const auto cfg = config_from_json(nlohmann::json::parse(R"({
            "command": "fig4", "tolerance": 1e-7, "threads": 3,
            "output": {"dir": "out", "formats": ["csv", "svg"]},
            "fig4": {"kicks": [0.1], "cuts": [0.1], "n_omega": 9}
        })"));
        CHECK(cfg.command == "fig4");
        CHECK(cfg.tolerance == 1e-7);
        CHECK(cfg.threads == 3);
        CHECK(cfg.output.formats.size() == 2);
        CHECK(cfg.fig4.n_omega == 9);
        CHECK(cfg.fig2.nx == 50);  // untouched defaults

        CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"tolerence": 1e-7})")),
                        ParameterError);
        CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"fig2": {"nx": "ten"}})")),
                        ParameterError);
        CHECK_THROWS_AS(format_from_string("png"), ParameterError);
        CHECK(format_from_string("SVG") == Format::SVG);
    }

    TEST_CASE("configuration invariants")
    {
        RunConfig cfg;
        cfg.command = "fig5";
        cfg.output.dir = scratch_dir("validate");
        cfg.tolerance = 0.0;
        CHECK_THROWS_AS(validate(cfg), ParameterError);
        cfg.tolerance = 2e-2;
        CHECK_THROWS_AS(validate(cfg), ParameterError);
        cfg.tolerance = 1e-6;
        CHECK_NOTHROW(validate(cfg));
        cfg.command = "fig2";
        cfg.fig2.kicks.clear();
        CHECK_THROWS_AS(validate(cfg), ParameterError);
        cfg.command = "nope";
        CHECK_THROWS_AS(validate(cfg), ParameterError);
    }

    TEST_CASE("kick ranges are index based")
    {
        const auto k = kick_range(0.0, 1.0, 0.05);
        REQUIRE(k.size() == 21);
        CHECK(k[7] == 7 * 0.05);
        CHECK(k.back() == 1.0);
        CHECK_THROWS_AS(kick_range(0.0, 1.0, 0.0), ParameterError);
    }

    TEST_CASE("SVG plots are deterministic and well formed")
    {
        Series s{"curve <a&b>", {0.0, 1.0, 2.0, 3.0}, {1.0, NAN, 4.0, 9.0}};
        const PlotSpec spec{"title", "x", "y"};
        const auto a = line_plot(spec, {s});
        CHECK(a == line_plot(spec, {s}));
        CHECK(a.rfind("<svg", 0) == 0);
        CHECK(a.find("</svg>") != std::string::npos);
        CHECK(a.find("curve &lt;a&amp;b&gt;") != std::string::npos);
        // The non-finite point splits the curve in two polylines.
        std::size_t n = 0;
        for (auto p = a.find("<polyline"); p != std::string::npos; p = a.find("<polyline", p + 1))
            ++n;
        CHECK(n == 2);
    }

    TEST_CASE("fig2 command writes tables, plots and the run record")
    {
        RunConfig cfg;
        cfg.command = "fig2";
        cfg.output.dir = scratch_dir("fig2");
        cfg.output.formats = {Format::CSV, Format::JSON, Format::SVG};
        cfg.fig2.nx = cfg.fig2.ny = 8;
        cfg.fig2.length = 4.0;
        cfg.fig2.kicks = {0.0, 0.2};
        cfg.fig2.n_theta = 37;
        const auto out = run_command(cfg);
        REQUIRE(out.tables.size() == 1);
        const auto& t = out.tables[0];
        CHECK(t.rows.size() == 2 * 2 * 37);
        CHECK(t.metadata["parameters"]["nx"] == 8);
        for (const auto& c : t.columns)
            CHECK_FALSE(c.unit.empty());
        const auto files = write_outputs(out, cfg, 1.5, 1);
        CHECK(files.size() == 4);
        for (const auto& f : files)
            CHECK(std::filesystem::exists(f));
        const auto run = nlohmann::json::parse(slurp(cfg.output.dir / "fig2.run.json"));
        CHECK(run["threads"] == 1);
        CHECK(run["wall_time_s"] == 1.5);
        // TM lobes exceed TE lobes; the zero-kick lobe is symmetric in theta.
        double te = 0.0, tm = 0.0;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            const double v = t.real(r, "rate");
            (std::get<std::string>(t.rows[r][0]) == "TE" ? te : tm) = std::max(
                std::get<std::string>(t.rows[r][0]) == "TE" ? te : tm, v);
        }
        CHECK(tm >= te);
        for (int i = 0; i < 37; ++i)
            CHECK(t.real(i, "rate") == doctest::Approx(t.real(36 - i, "rate")).epsilon(1e-9).scale(1e-12));
    }

    TEST_CASE("fig3 command marks forbidden points as explicit zeros")
    {
        RunConfig cfg;
        cfg.command = "fig3";
        cfg.output.dir = scratch_dir("fig3");
        cfg.fig3.kicks = {0.0, 0.4};
        cfg.fig3.n_theta = 7;
        cfg.fig3.n_phi = 9;
        const auto out = run_command(cfg);
        const auto& t = out.tables.at(0);
        CHECK(t.rows.size() == 2 * 2 * 7 * 9);
        bool any_forbidden = false;
        for (const auto& row : t.rows) {
            const bool allowed = std::get<bool>(row[7]);
            const double te = std::get<double>(row[5]), tm = std::get<double>(row[6]);
            CHECK(te >= 0.0);
            CHECK(tm >= 0.0);
            if (!allowed) {
                any_forbidden = true;
                CHECK(te == 0.0);
                CHECK(tm == 0.0);
            }
        }
        CHECK(any_forbidden);
        CHECK(t.metadata["region_transitions"]["high"]["critical_kicks"].size() == 3);
    }

    TEST_CASE("estimate command and thread resolution")
    {
        RunConfig cfg;
        cfg.command = "estimate";
        cfg.output.dir = scratch_dir("estimate");
        cfg.estimate.scenarios = {"waveguide"};
        const auto out = run_command(cfg);
        REQUIRE(out.tables.at(0).rows.size() == 1);
        CHECK(out.tables[0].real(0, "rate") == doctest::Approx(11e9 * 0.05 * 0.05 / 6.0));
        CHECK(resolve_thread_count(5) == 5);
        ::setenv("STDCE_THREADS", "3", 1);
        CHECK(resolve_thread_count(0) == 3);
        CHECK(resolve_thread_count(2) == 2);
        ::setenv("STDCE_THREADS", "junk", 1);
        CHECK(resolve_thread_count(0) >= 1);
        ::unsetenv("STDCE_THREADS");
    }
}
