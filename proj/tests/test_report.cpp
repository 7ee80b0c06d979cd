#include <doctest.h>

#include <sstream>

#include "thspec/report.hpp"

using namespace thspec;

namespace {

RunConfig config_for(std::vector<std::string> names, std::vector<int> levels, Mode mode = Mode::all)
{
    static const auto ms = builtin_molecules();
    RunConfig c;
    for (const auto& n : names)
        c.molecules.push_back(find_molecule(ms, n));
    c.levels = std::move(levels);
    c.mode = mode;
    return c;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> out;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        out.push_back(cells);
    }
    return out;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("spectrum table for HF")
    {
        const auto rows = cmd_spectrum(config_for({"HF"}, {0, 5, 7}));
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].n == 0);
        CHECK(rows[2].n == 7);
        const auto csv = format_spectrum(rows, OutputFormat::csv, false);
        const auto table = parse_csv(csv);
        REQUIRE(table.size() == 4);
        CHECK(csv.rfind(std::string(kSpectrumCsvHeader) + "\n", 0) == 0);
        CHECK(table[1][0] == "HF");
        CHECK(table[1][2] == "0.127772");
        // 9 decimals, within the golden tolerance of -5.868757846 and -5.868710627
        CHECK(table[1][3].size() == std::string("-5.868720932").size());
        CHECK(std::abs(std::stod(table[1][3]) - -5.868757846) < 5e-4);
        CHECK(std::abs(std::stod(table[1][4]) - -5.868710627) < 5e-4);
        CHECK(std::abs(std::stod(table[1][5]) - std::stod(table[1][3])) < 1e-8);
    }

    TEST_CASE("O2+ ground state")
    {
        const auto rows = cmd_spectrum(config_for({"O2+"}, {0}, Mode::th));
        const auto table = parse_csv(format_spectrum(rows, OutputFormat::csv, false));
        CHECK(table[1][3] == "-6.664568771");
        CHECK(table[1][4].empty());
        CHECK(table[1][5].empty());
    }

    TEST_CASE("unbound levels are annotated")
    {
        const auto rows = cmd_spectrum(config_for({"HF"}, {0, 999}));
        CHECK_FALSE(rows[0].unbound);
        CHECK(rows[1].unbound);
        const auto table = parse_csv(format_spectrum(rows, OutputFormat::csv, false));
        CHECK(table[2][3] == "unbound");
        CHECK(table[2][4] == "unbound");
        CHECK(table[2][5] == "unbound");
        const auto json = nlohmann::json::parse(format_spectrum(rows, OutputFormat::json, false));
        CHECK(json[1]["status"] == "unbound");
        CHECK(json[1]["E_th_minus_D_eV"].is_null());
    }

    TEST_CASE("CSV and JSON carry identical values")
    {
        const auto rows = cmd_spectrum(config_for({"N2", "I2"}, {0, 5}));
        const auto table = parse_csv(format_spectrum(rows, OutputFormat::csv, false));
        const auto json = nlohmann::json::parse(format_spectrum(rows, OutputFormat::json, false));
        const auto& header = table[0];
        REQUIRE(json.size() == table.size() - 1);
        for (std::size_t i = 0; i < json.size(); ++i)
            for (std::size_t j = 3; j < header.size(); ++j) {
                CAPTURE(header[j]);
                CHECK(json[i][header[j]].get<double>() == std::stod(table[i + 1][j]));
            }
    }

    TEST_CASE("output is deterministic")
    {
        const auto cfg = config_for({"H2", "O2"}, {0, 7});
        for (auto fmt : {OutputFormat::csv, OutputFormat::json, OutputFormat::pretty})
            CHECK(format_spectrum(cmd_spectrum(cfg), fmt, false) == format_spectrum(cmd_spectrum(cfg), fmt, false));
        CHECK(format_spectrum(cmd_spectrum(cfg), OutputFormat::json, true) ==
              format_spectrum(cmd_spectrum(cfg), OutputFormat::json, true));
    }

    TEST_CASE("invalid configurations")
    {
        RunConfig empty;
        empty.levels = {0};
        CHECK_THROWS_AS(cmd_spectrum(empty), std::invalid_argument);
        auto no_levels = config_for({"HF"}, {});
        CHECK_THROWS_AS(cmd_spectrum(no_levels), std::invalid_argument);
        CHECK_THROWS_AS(parse_mode("fast"), std::invalid_argument);
        CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    }

    TEST_CASE("verify passes on the default grid")
    {
        const auto report = cmd_verify(config_for({"HF", "I2"}, {0, 7}));
        CHECK(report.pass);
        CHECK(report.json["pass"] == true);
        REQUIRE(report.json["rows"].size() == 4);
        for (const auto& row : report.json["rows"])
            CHECK(std::abs(row["delta_th_oracle_eV"].get<double>()) <= 1e-4);
    }

    TEST_CASE("verify flags a coarse grid")
    {
        auto cfg = config_for({"HF"}, {5});
        cfg.grid.n_points = 500;
        const auto report = cmd_verify(cfg);
        CHECK_FALSE(report.pass);
        const auto& row = report.json["rows"][0];
        const bool refinement_failed = row.contains("errors") || row["checks"]["oracle_refinement"] == false;
        CHECK(refinement_failed);
    }

    TEST_CASE("wavefunction samples")
    {
        const auto curves = cmd_wavefunction(config_for({"HF"}, {0, 2}), 1000);
        REQUIRE(curves.size() == 2);
        for (const auto& c : curves) {
            REQUIRE(c.points.size() == 1000);
            int changes = 0;
            double riemann = 0.0;
            const double dr = c.points[1].first - c.points[0].first;
            for (std::size_t i = 0; i < c.points.size(); ++i) {
                riemann += c.points[i].second * c.points[i].second * dr;
                if (i && (c.points[i].second < 0.0) != (c.points[i - 1].second < 0.0) && c.points[i].second != 0.0 &&
                    c.points[i - 1].second != 0.0)
                    ++changes;
            }
            CHECK(changes == c.n);
            CHECK(std::abs(riemann - 1.0) <= 1e-3);
        }
        for (const auto& [r, v] : curves[0].points)
            CHECK(v >= 0.0);

        const auto csv = format_wavefunction(curves, OutputFormat::csv);
        CHECK(parse_csv(csv).size() == 2001);
        const auto json = nlohmann::json::parse(format_wavefunction(curves, OutputFormat::json));
        CHECK(json[1]["R"].size() == 1000);
        CHECK(json[1]["R"][500].get<double>() == curves[1].points[500].second);
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("energy formatting")
    {
        CHECK(format_ev(-5.8687578461) == "-5.868757846");
        CHECK(format_ev(-1e-12) == "0.000000000");
        CHECK(format_ev(0.0) == "0.000000000");
    }
}
