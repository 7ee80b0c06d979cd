#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thspec/molecule.hpp"

namespace thspec {

enum class Mode { th, morse, oracle, all };
enum class OutputFormat { csv, json, pretty };

Mode parse_mode(const std::string& s);
OutputFormat parse_format(const std::string& s);

struct GridOverrides {
    std::optional<int> n_points;
    std::optional<double> r_lo;
    std::optional<double> r_hi;
};

struct RunConfig {
    std::vector<MoleculeParams> molecules;
    std::vector<int> levels;
    Mode mode = Mode::all;
    OutputFormat format = OutputFormat::csv;
    GridOverrides grid;
    bool full_precision = false;

    /// Throws std::invalid_argument for an empty molecule or level list.
    void validate() const;
};

// All energies are E - D in eV.
struct SpectrumRow {
    std::string molecule;
    int n = 0;
    double c_h = 0.0;
    std::optional<double> th;
    std::optional<double> morse;
    std::optional<double> oracle;
    std::optional<double> delta_th_oracle;
    Mode mode = Mode::all;
    bool unbound = false;

    bool wants_th() const { return mode != Mode::morse; }
    bool wants_morse() const { return mode == Mode::morse || mode == Mode::all; }
    bool wants_oracle() const { return mode == Mode::oracle || mode == Mode::all; }
};

inline constexpr const char* kSpectrumCsvHeader =
    "molecule,n,c_h,E_th_minus_D_eV,E_morse_minus_D_eV,E_oracle_minus_D_eV,delta_th_oracle_eV";

std::vector<SpectrumRow> cmd_spectrum(const RunConfig& config);
std::string format_spectrum(const std::vector<SpectrumRow>& rows, OutputFormat format, bool full_precision);

struct VerifyTolerances {
    double dual_path = 1e-9;       // eV
    double residual = 1e-8;        // dimensionless
    double th_oracle = 1e-4;       // eV
    double morse_oracle = 1e-5;    // eV
    double refinement = 1e-6;      // eV
    double normalization = 1e-8;
};

struct VerifyReport {
    nlohmann::ordered_json json;
    bool pass = true;
};

VerifyReport cmd_verify(const RunConfig& config, const VerifyTolerances& tol = {});

struct WavefunctionSamples {
    std::string molecule;
    int n = 0;
    double energy_minus_depth = 0.0;
    std::vector<std::pair<double, double>> points;  // (r in angstrom, R in angstrom^-1/2)
    bool unbound = false;
};

std::vector<WavefunctionSamples> cmd_wavefunction(const RunConfig& config, int samples);
std::string format_wavefunction(const std::vector<WavefunctionSamples>& curves, OutputFormat format);

/// Fixed 9-decimal rendering used in every table output.
std::string format_ev(double value);

} // namespace thspec
