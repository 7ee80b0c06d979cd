#include "thspec/molecule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace thspec {

namespace {

constexpr std::string_view kBuiltinTable =
    "# name c_h mu_1e-23g b_h_invA r_e_A beta_invA D_cm-1\n"
    "HF 0.127772 0.160 1.94207 0.917 2.2266 49382\n"
    "N2 -0.032325 1.171 2.78585 1.097 2.6986 79885\n"
    "I2 -0.139013 10.612 2.12343 2.666 1.8643 12547\n"
    "H2 0.170066 0.084 1.61890 0.741 1.9506 38318\n"
    "O2 0.027262 1.377 2.59103 1.207 2.6636 42041\n"
    "O2+ -0.019445 1.377 2.86987 1.116 2.8151 54688\n";

constexpr const char* kHeader = "# name c_h mu_1e-23g b_h_invA r_e_A beta_invA D_cm-1\n";

double parse_number(std::string_view token, std::size_t line, const char* field)
{
    double value = 0.0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
        throw ParseError(line, std::string("cannot parse ") + field + " from '" + std::string(token) + "'");
    return value;
}

std::string format_number(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

ValidationError::ValidationError(std::string molecule, std::string field, const std::string& what)
    : std::invalid_argument(molecule + ": " + field + " " + what),
      molecule_(std::move(molecule)),
      field_(std::move(field))
{
}

MoleculeParams make_molecule(const TableRow& row, const PhysicalConstants& pc)
{
    pc.validate();
    auto fail = [&](const char* field, const std::string& msg) { throw ValidationError(row.name, field, msg); };

    if (row.name.empty())
        fail("name", "must not be empty");
    if (!(row.c_h < 1.0))
        fail("c_h", "must be < 1");
    if (!(row.mass_1e23_g > 0.0))
        fail("mu", "must be > 0");
    if (!(row.b_h > 0.0))
        fail("b_h", "must be > 0");
    if (!(row.r_e > 0.0))
        fail("r_e", "must be > 0");
    if (!(row.depth_inverse_cm > 0.0))
        fail("D", "must be > 0");
    if (row.beta) {
        if (!(*row.beta > 0.0))
            fail("beta", "must be > 0");
        const double rel = std::abs(row.b_h - *row.beta * (1.0 - row.c_h)) / row.b_h;
        if (rel > kBetaConsistencyTolerance)
            fail("b_h", "inconsistent with beta (1 - c_h): relative mismatch " + std::to_string(rel));
    }

    MoleculeParams m;
    m.name = row.name;
    m.c_h = row.c_h;
    m.mu_c2 = convert_mass_grams_to_ev(row.mass_1e23_g, pc);
    m.b_h = row.b_h;
    m.r_e = row.r_e;
    m.beta = row.beta;
    m.depth = convert_wavenumber_to_ev(row.depth_inverse_cm, pc);
    m.constants = pc;
    return m;
}

std::vector<TableRow> parse_table(std::string_view source)
{
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const std::size_t eol = std::min(source.find('\n', pos), source.size());
        std::string_view line = source.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty()) {
            if (eol == source.size())
                break;
            continue;
        }
        if (tokens.size() != 7)
            throw ParseError(line_no, "expected 7 columns (name c_h mu b_h r_e beta D), got " +
                                          std::to_string(tokens.size()));

        TableRow row;
        row.name = std::string(tokens[0]);
        row.c_h = parse_number(tokens[1], line_no, "c_h");
        row.mass_1e23_g = parse_number(tokens[2], line_no, "mu");
        row.b_h = parse_number(tokens[3], line_no, "b_h");
        row.r_e = parse_number(tokens[4], line_no, "r_e");
        if (tokens[5] != "-")
            row.beta = parse_number(tokens[5], line_no, "beta");
        row.depth_inverse_cm = parse_number(tokens[6], line_no, "D");
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            if (k)
                row.text += ' ';
            row.text += tokens[k];
        }
        rows.push_back(std::move(row));
        if (eol == source.size())
            break;
    }
    return rows;
}

std::string serialize_table(std::span<const TableRow> rows)
{
    std::string out = kHeader;
    for (const auto& row : rows) {
        if (!row.text.empty()) {
            out += row.text;
        } else {
            out += row.name;
            for (double v : {row.c_h, row.mass_1e23_g, row.b_h, row.r_e})
                out += ' ' + format_number(v);
            out += ' ' + (row.beta ? format_number(*row.beta) : std::string("-"));
            out += ' ' + format_number(row.depth_inverse_cm);
        }
        out += '\n';
    }
    return out;
}

std::vector<MoleculeParams> load_molecules(std::string_view source, const PhysicalConstants& pc)
{
    std::vector<MoleculeParams> out;
    for (const auto& row : parse_table(source))
        out.push_back(make_molecule(row, pc));
    return out;
}

std::vector<MoleculeParams> load_molecule_file(const std::string& path, const PhysicalConstants& pc)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open molecule file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_molecules(ss.str(), pc);
}

std::string_view builtin_table_text() { return kBuiltinTable; }

std::vector<MoleculeParams> builtin_molecules(const PhysicalConstants& pc)
{
    return load_molecules(kBuiltinTable, pc);
}

const MoleculeParams& find_molecule(std::span<const MoleculeParams> molecules, std::string_view name)
{
    auto it = std::find_if(molecules.begin(), molecules.end(), [&](const auto& m) { return m.name == name; });
    if (it == molecules.end())
        throw std::out_of_range("unknown molecule '" + std::string(name) + "'");
    return *it;
}

MoleculeParams with_potential_constant(const MoleculeParams& m, double c_h)
{
    if (!m.beta)
        throw ValidationError(m.name, "beta", "is required to vary c_h");
    if (!(c_h < 1.0))
        throw ValidationError(m.name, "c_h", "must be < 1");
    MoleculeParams out = m;
    out.c_h = c_h;
    out.b_h = *m.beta * (1.0 - c_h);
    return out;
}

} // namespace thspec
