// thspec: vibrational s-wave spectra of diatomic molecules in the Tietz-Hua
// potential, with Morse and Numerov cross-checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 partial success (some requested levels are unbound).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "thspec/molecule.hpp"
#include "thspec/report.hpp"

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

struct Options {
    std::optional<std::string> molecules;
    std::string molecule_file;
    std::string levels = "0,5,7";
    std::string mode = "all";
    std::string format = "csv";
    std::optional<int> grid_points;
    std::optional<double> r_lo, r_hi;
    std::optional<double> hbar_c, ev_per_inverse_cm, ev_per_amu, grams_per_amu;
    bool full_precision = false;
    int samples = 1000;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--molecules", o.molecules, "Comma-separated molecule names (default: every molecule in the source)");
    cmd->add_option("--molecule-file", o.molecule_file,
                    "Parameter file 'name c_h mu_1e-23g b_h r_e beta D_cm-1' (default: $THSPEC_MOLECULES or built-in)");
    cmd->add_option("--levels", o.levels, "Comma-separated vibrational quantum numbers")->capture_default_str();
    cmd->add_option("--format", o.format, "csv, json or pretty")->capture_default_str();
    cmd->add_option("--grid-points", o.grid_points, "Numerov grid points");
    cmd->add_option("--r-lo", o.r_lo, "Numerov grid start (angstrom)");
    cmd->add_option("--r-hi", o.r_hi, "Numerov grid end (angstrom)");
    cmd->add_option("--hbar-c", o.hbar_c, "hbar c in eV angstrom");
    cmd->add_option("--ev-per-inverse-cm", o.ev_per_inverse_cm, "eV per cm^-1");
    cmd->add_option("--ev-per-amu", o.ev_per_amu, "amu rest energy in eV");
    cmd->add_option("--grams-per-amu", o.grams_per_amu, "grams per amu");
}

thspec::RunConfig build_config(const Options& o)
{
    thspec::PhysicalConstants pc;
    if (o.hbar_c)
        pc.hbar_c = *o.hbar_c;
    if (o.ev_per_inverse_cm)
        pc.ev_per_inverse_cm = *o.ev_per_inverse_cm;
    if (o.ev_per_amu)
        pc.ev_per_amu_c2 = *o.ev_per_amu;
    if (o.grams_per_amu)
        pc.grams_per_amu = *o.grams_per_amu;

    std::string path = o.molecule_file;
    if (path.empty())
        if (const char* env = std::getenv("THSPEC_MOLECULES"); env && *env)
            path = env;

    thspec::RunConfig config;
    try {
        pc.validate();
        const auto available = path.empty() ? thspec::builtin_molecules(pc) : thspec::load_molecule_file(path, pc);
        if (o.molecules) {
            for (const auto& name : split_list(*o.molecules))
                config.molecules.push_back(thspec::find_molecule(available, name));
        } else {
            config.molecules = available;
        }
        for (const auto& lv : split_list(o.levels)) {
            std::size_t used = 0;
            const int n = std::stoi(lv, &used);
            if (used != lv.size())
                throw std::invalid_argument("bad level '" + lv + "'");
            config.levels.push_back(n);
        }
        config.mode = thspec::parse_mode(o.mode);
        config.format = thspec::parse_format(o.format);
        config.grid.n_points = o.grid_points;
        config.grid.r_lo = o.r_lo;
        config.grid.r_hi = o.r_hi;
        config.full_precision = o.full_precision;
        config.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return config;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tietz-Hua vibrational spectra via the parametric Nikiforov-Uvarov method"};
    app.require_subcommand(1);

    Options o;
    auto* spectrum = app.add_subcommand("spectrum", "Energy table E - D for molecules and levels");
    add_common(spectrum, o);
    spectrum->add_option("--mode", o.mode, "th, morse, oracle or all")->capture_default_str();
    spectrum->add_flag("--full-precision", o.full_precision, "Print 17 significant digits instead of 9 decimals");

    auto* verify = app.add_subcommand("verify", "Cross-check closed form, Morse limit and Numerov oracle (JSON report)");
    add_common(verify, o);

    auto* wave = app.add_subcommand("wavefunction", "Sample normalized radial wavefunctions");
    add_common(wave, o);
    wave->add_option("--samples", o.samples, "Samples per curve")->capture_default_str();

    auto* molecules = app.add_subcommand("molecules", "Print the molecule parameter table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*molecules) {
            std::cout << thspec::serialize_table(thspec::parse_table(thspec::builtin_table_text()));
            return 0;
        }

        const auto config = build_config(o);

        if (*spectrum) {
            const auto rows = thspec::cmd_spectrum(config);
            std::cout << thspec::format_spectrum(rows, config.format, config.full_precision);
            for (const auto& r : rows)
                if (r.unbound)
                    return kExitPartial;
            return 0;
        }
        if (*verify) {
            const auto report = thspec::cmd_verify(config);
            std::cout << report.json.dump(2) << '\n';
            return report.pass ? 0 : kExitTolerance;
        }
        if (*wave) {
            const auto curves = thspec::cmd_wavefunction(config, o.samples);
            std::cout << thspec::format_wavefunction(curves, config.format);
            for (const auto& c : curves)
                if (c.unbound)
                    return kExitPartial;
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    }
    return 0;
}
