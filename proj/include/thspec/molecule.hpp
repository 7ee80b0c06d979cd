#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thspec/constants.hpp"

namespace thspec {

// One row of a molecule parameter table, in the table's own units.
struct TableRow {
    std::string name;
    double c_h = 0.0;               // dimensionless
    double mass_1e23_g = 0.0;       // reduced mass in 1e-23 g
    double b_h = 0.0;               // 1/angstrom
    double r_e = 0.0;               // angstrom
    std::optional<double> beta;     // 1/angstrom, Morse constant
    double depth_inverse_cm = 0.0;  // cm^-1

    // Original whitespace-normalized text of the row. Empty for rows built in code.
    std::string text;
};

// Potential parameters in internal units.
struct MoleculeParams {
    std::string name;
    double c_h = 0.0;
    double mu_c2 = 0.0;  // eV
    double b_h = 0.0;    // 1/angstrom
    double r_e = 0.0;    // angstrom
    std::optional<double> beta;
    double depth = 0.0;  // eV
    PhysicalConstants constants;

    double two_mu_over_hbar2() const { return constants.two_mu_over_hbar2(mu_c2); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string molecule, std::string field, const std::string& what);
    const std::string& molecule() const noexcept { return molecule_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::string molecule_;
    std::string field_;
};

/// Relative tolerance of the b_h = beta (1 - c_h) consistency check.
inline constexpr double kBetaConsistencyTolerance = 1e-2;

MoleculeParams make_molecule(const TableRow& row, const PhysicalConstants& pc = {});

std::vector<TableRow> parse_table(std::string_view source);
std::string serialize_table(std::span<const TableRow> rows);

std::vector<MoleculeParams> load_molecules(std::string_view source, const PhysicalConstants& pc = {});
std::vector<MoleculeParams> load_molecule_file(const std::string& path, const PhysicalConstants& pc = {});

/// The six built-in rows (HF, N2, I2, H2, O2, O2+), verbatim.
std::string_view builtin_table_text();
std::vector<MoleculeParams> builtin_molecules(const PhysicalConstants& pc = {});

/// Look up by name; throws std::out_of_range when absent.
const MoleculeParams& find_molecule(std::span<const MoleculeParams> molecules, std::string_view name);

/// Same molecule with c_h replaced and b_h recomputed as beta (1 - c_h).
/// Requires beta. With c_h = 0 this is the Morse limit of the molecule.
MoleculeParams with_potential_constant(const MoleculeParams& m, double c_h);

} // namespace thspec
