#include "thspec/report.hpp"

#include "thspec/nu_engine.hpp"
#include "thspec/numerov.hpp"
#include "thspec/th_model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace thspec {

namespace {

using Json = nlohmann::ordered_json;

std::string shortest(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string full(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RadialGrid grid_for(const MoleculeParams& m, const GridOverrides& o)
{
    RadialGrid g = default_grid(m, o.n_points.value_or(kDefaultGridPoints));
    return RadialGrid::make(o.r_lo.value_or(g.r_lo), o.r_hi.value_or(g.r_hi), g.n_points);
}

// Evaluate f over every (molecule, level) cell concurrently; results in input order.
template <typename F>
auto map_cells(const RunConfig& config, F f)
{
    using R = decltype(f(config.molecules.front(), 0));
    std::vector<std::future<R>> futures;
    for (const auto& m : config.molecules)
        for (int n : config.levels)
            futures.push_back(std::async(std::launch::async, [&m, n, &f] { return f(m, n); }));
    std::vector<R> out;
    out.reserve(futures.size());
    for (auto& fu : futures)
        out.push_back(fu.get());
    return out;
}

template <typename F>
std::optional<double> try_level(F f, bool& unbound)
{
    try {
        return f();
    } catch (const NoBoundLevel&) {
        unbound = true;
        return std::nullopt;
    }
}

Json number_or_null(const std::optional<double>& v, bool full_precision)
{
    if (!v)
        return nullptr;
    return full_precision ? *v : std::stod(format_ev(*v));
}

} // namespace

std::string format_ev(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    // Values that round to zero print unsigned.
    if (std::string_view(buf) == "-0.000000000")
        return "0.000000000";
    return buf;
}

Mode parse_mode(const std::string& s)
{
    if (s == "th")
        return Mode::th;
    if (s == "morse")
        return Mode::morse;
    if (s == "oracle")
        return Mode::oracle;
    if (s == "all")
        return Mode::all;
    throw std::invalid_argument("unknown mode '" + s + "' (expected th, morse, oracle or all)");
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    if (s == "pretty")
        return OutputFormat::pretty;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or pretty)");
}

void RunConfig::validate() const
{
    if (molecules.empty())
        throw std::invalid_argument("at least one molecule is required");
    if (levels.empty())
        throw std::invalid_argument("at least one level is required");
    for (int n : levels)
        if (n < 0)
            throw std::invalid_argument("levels must be non-negative");
}

std::vector<SpectrumRow> cmd_spectrum(const RunConfig& config)
{
    config.validate();
    return map_cells(config, [&](const MoleculeParams& m, int n) {
        SpectrumRow row;
        row.molecule = m.name;
        row.n = n;
        row.c_h = m.c_h;
        row.mode = config.mode;
        if (row.wants_th())
            row.th = try_level([&] { return th_energy(n, m).energy_minus_depth; }, row.unbound);
        if (row.wants_morse())
            row.morse = try_level([&] { return morse_energy(n, m).energy_minus_depth; }, row.unbound);
        if (row.wants_oracle())
            row.oracle = try_level(
                [&] { return find_eigenvalue(n, m, grid_for(m, config.grid), false).energy - m.depth; },
                row.unbound);
        if (row.th && row.oracle)
            row.delta_th_oracle = *row.th - *row.oracle;
        return row;
    });
}

std::string format_spectrum(const std::vector<SpectrumRow>& rows, OutputFormat format, bool full_precision)
{
    std::ostringstream out;
    auto cell = [&](const std::optional<double>& v, bool requested) -> std::string {
        if (v)
            return full_precision ? full(*v) : format_ev(*v);
        return requested ? "unbound" : "";
    };

    switch (format) {
    case OutputFormat::csv:
        out << kSpectrumCsvHeader << '\n';
        for (const auto& r : rows) {
            out << r.molecule << ',' << r.n << ',' << shortest(r.c_h) << ',' << cell(r.th, r.wants_th()) << ','
                << cell(r.morse, r.wants_morse()) << ',' << cell(r.oracle, r.wants_oracle()) << ','
                << (r.delta_th_oracle ? (full_precision ? full(*r.delta_th_oracle) : format_ev(*r.delta_th_oracle))
                                      : "")
                << '\n';
        }
        break;
    case OutputFormat::json: {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json o;
            o["molecule"] = r.molecule;
            o["n"] = r.n;
            o["c_h"] = r.c_h;
            o["E_th_minus_D_eV"] = number_or_null(r.th, full_precision);
            o["E_morse_minus_D_eV"] = number_or_null(r.morse, full_precision);
            o["E_oracle_minus_D_eV"] = number_or_null(r.oracle, full_precision);
            o["delta_th_oracle_eV"] = number_or_null(r.delta_th_oracle, full_precision);
            if (r.unbound)
                o["status"] = "unbound";
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case OutputFormat::pretty: {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-8s %3s %10s %16s %16s %16s %14s\n", "molecule", "n", "c_h", "TH E-D (eV)",
                      "Morse E-D (eV)", "Numerov E-D (eV)", "TH-Numerov");
        out << buf;
        for (const auto& r : rows) {
            auto txt = [&](const std::optional<double>& v) { return v ? format_ev(*v) : std::string("-"); };
            std::snprintf(buf, sizeof buf, "%-8s %3d %10s %16s %16s %16s %14s%s\n", r.molecule.c_str(), r.n,
                          shortest(r.c_h).c_str(), txt(r.th).c_str(), txt(r.morse).c_str(), txt(r.oracle).c_str(),
                          txt(r.delta_th_oracle).c_str(), r.unbound ? "  unbound" : "");
            out << buf;
        }
        break;
    }
    }
    return out.str();
}

VerifyReport cmd_verify(const RunConfig& config, const VerifyTolerances& tol)
{
    config.validate();

    auto rows = map_cells(config, [&](const MoleculeParams& m, int n) {
        Json row;
        row["molecule"] = m.name;
        row["n"] = n;
        row["c_h"] = m.c_h;
        Json checks = Json::object();
        Json errors = Json::array();

        auto check = [&](const char* name, bool ok) { checks[name] = ok; };

        try {
            const auto level = th_energy(n, m);
            const auto closed = th_energy_closed(n, m);
            const auto coeffs = derive_coefficients(nu_base_for_th(m, level.energy));
            const double residual = energy_residual(n, coeffs);
            const double slope = tau_prime(coeffs);
            row["E_th_minus_D_eV"] = level.energy_minus_depth;
            row["E_closed_minus_D_eV"] = closed.energy_minus_depth;
            row["dual_path_delta_eV"] = level.energy - closed.energy;
            row["residual"] = residual;
            row["tau_prime"] = slope;
            check("dual_path", std::abs(level.energy - closed.energy) <= tol.dual_path);
            check("residual", std::abs(residual) <= tol.residual);
            check("tau_prime_negative", slope < 0.0);

            const auto wf = radial_wavefunction(n, m);
            const int nodes = count_nodes(wf);
            const double norm_error = norm_integral(wf) - 1.0;
            row["wavefunction_nodes"] = nodes;
            row["normalization_error"] = norm_error;
            check("node_count", nodes == n);
            check("normalization", std::abs(norm_error) <= tol.normalization);

            const auto oracle = find_eigenvalue(n, m, grid_for(m, config.grid));
            const double delta = level.energy - oracle.energy;
            row["E_oracle_minus_D_eV"] = oracle.energy - m.depth;
            row["delta_th_oracle_eV"] = delta;
            row["oracle_match_defect"] = oracle.residual_mismatch;
            row["oracle_refinement_shift_eV"] = oracle.refinement_shift;
            check("th_vs_oracle", std::abs(delta) <= tol.th_oracle);
            check("oracle_refinement", std::abs(oracle.refinement_shift) <= tol.refinement);
        } catch (const std::exception& e) {
            errors.push_back(std::string("th: ") + e.what());
        }

        try {
            if (m.beta) {
                const auto morse_m = with_potential_constant(m, 0.0);
                const auto morse = morse_energy(n, m);
                const auto oracle = find_eigenvalue(n, morse_m, grid_for(morse_m, config.grid));
                const double delta = morse.energy - oracle.energy;
                row["E_morse_minus_D_eV"] = morse.energy_minus_depth;
                row["E_oracle_morse_minus_D_eV"] = oracle.energy - m.depth;
                row["delta_morse_oracle_eV"] = delta;
                row["morse_oracle_refinement_shift_eV"] = oracle.refinement_shift;
                check("morse_vs_oracle", std::abs(delta) <= tol.morse_oracle);
                check("morse_oracle_refinement", std::abs(oracle.refinement_shift) <= tol.refinement);
            }
        } catch (const std::exception& e) {
            errors.push_back(std::string("morse: ") + e.what());
        }

        bool pass = errors.empty();
        for (const auto& [name, ok] : checks.items())
            pass = pass && ok.get<bool>();
        row["checks"] = checks;
        if (!errors.empty())
            row["errors"] = errors;
        row["pass"] = pass;
        return row;
    });

    VerifyReport report;
    Json tolerances;
    tolerances["dual_path_eV"] = tol.dual_path;
    tolerances["residual"] = tol.residual;
    tolerances["th_oracle_eV"] = tol.th_oracle;
    tolerances["morse_oracle_eV"] = tol.morse_oracle;
    tolerances["refinement_eV"] = tol.refinement;
    tolerances["normalization"] = tol.normalization;
    report.json["tolerances"] = tolerances;
    report.json["rows"] = Json::array();
    for (auto& r : rows) {
        report.pass = report.pass && r["pass"].get<bool>();
        report.json["rows"].push_back(std::move(r));
    }
    report.json["pass"] = report.pass;
    return report;
}

std::vector<WavefunctionSamples> cmd_wavefunction(const RunConfig& config, int samples)
{
    config.validate();
    if (samples < 2)
        throw std::invalid_argument("at least two samples are required");
    return map_cells(config, [&](const MoleculeParams& m, int n) {
        WavefunctionSamples out;
        out.molecule = m.name;
        out.n = n;
        try {
            const auto wf = radial_wavefunction(n, m);
            out.energy_minus_depth = wf.level.energy_minus_depth;
            out.points.reserve(samples);
            for (int i = 0; i < samples; ++i) {
                const double r = wf.domain.r_lo + (wf.domain.r_hi - wf.domain.r_lo) * i / (samples - 1);
                out.points.emplace_back(r, wf(r));
            }
        } catch (const NoBoundLevel&) {
            out.unbound = true;
        }
        return out;
    });
}

std::string format_wavefunction(const std::vector<WavefunctionSamples>& curves, OutputFormat format)
{
    std::ostringstream out;
    if (format == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& c : curves) {
            Json o;
            o["molecule"] = c.molecule;
            o["n"] = c.n;
            if (c.unbound) {
                o["status"] = "unbound";
            } else {
                o["E_minus_D_eV"] = std::stod(format_ev(c.energy_minus_depth));
                Json r = Json::array(), v = Json::array();
                for (const auto& [x, y] : c.points) {
                    r.push_back(x);
                    v.push_back(y);
                }
                o["r_A"] = std::move(r);
                o["R"] = std::move(v);
            }
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << '\n';
        return out.str();
    }
    out << "molecule,n,r_A,R\n";
    for (const auto& c : curves) {
        if (c.unbound) {
            out << c.molecule << ',' << c.n << ",unbound,\n";
            continue;
        }
        for (const auto& [x, y] : c.points)
            out << c.molecule << ',' << c.n << ',' << shortest(x) << ',' << shortest(y) << '\n';
    }
    return out.str();
}

} // namespace thspec
