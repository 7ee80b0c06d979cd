#include <doctest.h>

#include <cmath>

#include "golden.hpp"
#include "oracles.hpp"
#include "thspec/special_functions.hpp"
#include "thspec/th_model.hpp"

using namespace thspec;
using namespace thspec::testing;

namespace {

const std::vector<MoleculeParams>& molecules()
{
    static const auto ms = builtin_molecules();
    return ms;
}

const MoleculeParams& mol(std::string_view name) { return find_molecule(molecules(), name); }

// c_h > 0 with the pole at positive r.
MoleculeParams pole_molecule()
{
    TableRow row{"P", 0.5, 1.0, 2.0, 1.0, 4.0, 20000.0, ""};
    return make_molecule(row);
}

} // namespace

TEST_SUITE("th_model")
{
    TEST_CASE("potential shape")
    {
        const auto& hf = mol("HF");
        CHECK(th_potential(hf.r_e, hf) == 0.0);
        CHECK(std::abs(th_potential(hf.r_e + 20.0 / hf.b_h, hf) - hf.depth) < 1e-6 * hf.depth);
        // mpmath on the defining formula with the HF row
        CHECK(th_potential(1.2, hf) == doctest::Approx(1.2758288989729049).epsilon(1e-13));
        CHECK_THROWS_AS(th_potential(0.0, hf), DomainError);
    }

    TEST_CASE("potential pole")
    {
        const auto p = pole_molecule();
        const auto rs = pole_radius(p);
        REQUIRE(rs.has_value());
        CHECK(*rs == doctest::Approx(1.0 + std::log(0.5) / 2.0));
        try {
            th_potential(*rs, p);
            FAIL("expected SingularityError");
        } catch (const SingularityError& e) {
            CHECK(e.pole() == doctest::Approx(*rs));
        }
        CHECK_FALSE(pole_radius(mol("I2")).has_value());
    }

    TEST_CASE("dimensionless mapping")
    {
        const auto& hf = mol("HF");
        const auto p = dimensionless_problem(hf, 0.5 * hf.depth);
        CHECK(p.s(hf.r_e) == 1.0);
        CHECK(p.s(hf.r_e + 0.1) < p.s(hf.r_e));
        CHECK(p.eps < p.d);
        CHECK(p.alpha == hf.b_h * hf.r_e);
    }

    TEST_CASE("NU base for the Tietz-Hua problem")
    {
        const auto& hf = mol("HF");
        const auto b = nu_base_for_th(hf, 0.5 * hf.depth);
        const auto w = th_base_direct(hf, 0.5 * hf.depth);
        CHECK(b.alpha1 == 1.0);
        CHECK(b.alpha2 == hf.c_h);
        CHECK(b.alpha3 == hf.c_h);
        CHECK(b.xi1 == doctest::Approx(w.xi1).epsilon(1e-14));
        CHECK(b.xi2 == doctest::Approx(w.xi2).epsilon(1e-14));
        CHECK(b.xi3 == doctest::Approx(w.xi3).epsilon(1e-14));

        const auto near_top = nu_base_for_th(hf, hf.depth * (1.0 - 1e-12));
        CHECK(std::abs(near_top.xi3) < 1e-8);

        const auto morse = with_potential_constant(hf, 0.0);
        const auto m = nu_base_for_th(morse, 0.4 * hf.depth);
        const double d_over_b2 = morse.two_mu_over_hbar2() * morse.depth / (morse.b_h * morse.b_h);
        CHECK(m.xi1 == doctest::Approx(d_over_b2).epsilon(1e-14));
        CHECK(m.xi3 == doctest::Approx(m.xi1 * 0.6).epsilon(1e-14));
        CHECK(m.xi2 == doctest::Approx(2.0 * d_over_b2).epsilon(1e-14));

        CHECK_THROWS_AS(nu_base_for_th(hf, 0.0), DomainError);
        CHECK_THROWS_AS(nu_base_for_th(hf, hf.depth), DomainError);
    }

    TEST_CASE("published Tietz-Hua energies")
    {
        CHECK(th_energy(0, mol("HF")).energy_minus_depth == doctest::Approx(-5.868757846).epsilon(5e-4 / 5.87));
        CHECK(std::abs(th_energy(7, mol("I2")).energy_minus_depth - -1.361840252) < 1e-8);
        CHECK(std::abs(th_energy(5, mol("O2")).energy_minus_depth - -4.205982010) < 5e-4);
        for (const auto& g : kGoldenRows) {
            CAPTURE(g.molecule);
            CAPTURE(g.n);
            CHECK(std::abs(th_energy(g.n, mol(g.molecule)).energy_minus_depth - g.th) <= kGoldenTolerance);
            CHECK(std::abs(morse_energy(g.n, mol(g.molecule)).energy_minus_depth - g.morse) <= kGoldenTolerance);
        }
    }

    TEST_CASE("root finding and the linear-in-t solve agree")
    {
        for (const auto& m : molecules())
            for (int n = 0; n <= 10; ++n) {
                const auto a = th_energy(n, m);
                const auto b = th_energy_closed(n, m);
                CHECK(std::abs(a.energy - b.energy) <= 1e-9);
                CHECK(a.energy_minus_depth == a.energy - m.depth);
                CHECK(a.t == doctest::Approx(b.t).epsilon(1e-8));
            }
        CHECK(std::abs(th_energy_closed(0, mol("HF")).energy_minus_depth - -5.868757846) < 5e-4);
    }

    TEST_CASE("closed form at c_h = 0 is the Morse spectrum")
    {
        for (const auto& m : molecules()) {
            const auto morse = with_potential_constant(m, 0.0);
            for (int n : {0, 1, 5, 7, 12}) {
                const double a = th_energy_closed(n, morse).energy;
                const double b = morse_energy(n, m).energy;
                CHECK(std::abs(a - b) <= 1e-12 * m.depth);
            }
        }
    }

    TEST_CASE("Morse special cases")
    {
        CHECK(std::abs(morse_energy(0, mol("HF")).energy_minus_depth - -5.868710627) < 5e-4);
        CHECK(std::abs(morse_energy(7, mol("H2")).energy_minus_depth - -1.535779780) < 1e-7);

        // Choose D so that 2n + 1 = sqrt(8 mu D / (b^2 hbar^2)) for n = 3.
        auto m = mol("HF");
        const int n = 3;
        m.depth = std::pow((2.0 * n + 1.0) * *m.beta, 2) / (4.0 * m.two_mu_over_hbar2());
        CHECK(morse_energy(n, m).energy == doctest::Approx(m.depth).epsilon(1e-13));
        CHECK_THROWS_AS(morse_energy(n + 1, m), NoBoundLevel);
    }

    TEST_CASE("levels beyond the well")
    {
        const auto& hf = mol("HF");
        CHECK_THROWS_AS(th_energy(999, hf), NoBoundLevel);
        CHECK_THROWS_AS(th_energy_closed(999, hf), NoBoundLevel);
        CHECK_THROWS_AS(morse_energy(999, hf), NoBoundLevel);
        const int count = th_level_count(hf);
        CHECK(count > 7);
        CHECK_NOTHROW(th_energy(count - 1, hf));
        CHECK_THROWS_AS(th_energy(count, hf), NoBoundLevel);
    }

    TEST_CASE("ordering, residual at the root and tau prime")
    {
        for (const auto& m : molecules()) {
            CAPTURE(m.name);
            double previous = 0.0;
            const int count = th_level_count(m);
            for (int n = 0; n < count; ++n) {
                const auto level = th_energy(n, m);
                CHECK(level.energy > previous);
                CHECK(level.energy < m.depth);
                CHECK(level.t > 0.0);
                previous = level.energy;
                const auto c = derive_coefficients(nu_base_for_th(m, level.energy));
                CHECK(std::abs(energy_residual(n, c)) <= 1e-8);
                CHECK(tau_prime(c) < 0.0);
            }
        }
    }

    TEST_CASE("Morse-limit continuity")
    {
        for (const auto& m : molecules())
            for (int n : {0, 5, 7}) {
                const auto near = with_potential_constant(m, 1e-8);
                CHECK(std::abs(th_energy(n, near).energy - morse_energy(n, m).energy) <= 1e-6);
            }
    }

    TEST_CASE("printed closed-form relation is a diagnostic only")
    {
        // The two polynomial variants differ by exactly c_h * 2n.
        const auto& h2 = mol("H2");
        const double e = th_energy(5, h2).energy;
        const double printed = eq15_as_printed_residual(5, h2, e, Eq15Polynomial::as_printed);
        const double derived = eq15_as_printed_residual(5, h2, e, Eq15Polynomial::derived);
        CHECK(printed - derived == doctest::Approx(h2.c_h * 10.0).epsilon(1e-9));
        // The transcription does not vanish at the level found from the general condition.
        CHECK(std::abs(derived) > 1.0);
    }

    TEST_CASE("validity domain")
    {
        const auto& hf = mol("HF");
        const auto dom = validity_domain(hf);
        CHECK(dom.r_hi == doctest::Approx(13.789862461188320).epsilon(1e-14));
        CHECK(dom.r_lo == 1e-6);
        const auto p = pole_molecule();
        CHECK(validity_domain(p).r_lo == doctest::Approx(*pole_radius(p) + 1e-6).epsilon(1e-15));
    }

    TEST_CASE("ground state is nodeless and normalized")
    {
        const auto wf = radial_wavefunction(0, mol("HF"));
        CHECK(count_nodes(wf) == 0);
        CHECK(wf.norm > 0.0);
        CHECK(wf(wf.r_e) > 0.0);
        CHECK(std::abs(norm_integral(wf) - 1.0) <= 1e-8);
    }

    TEST_CASE("node count and normalization for every level up to 7")
    {
        for (const auto& m : molecules())
            for (int n = 0; n <= 7; ++n) {
                CAPTURE(m.name);
                CAPTURE(n);
                const auto wf = radial_wavefunction(n, m);
                CHECK(count_nodes(wf) == n);
                CHECK(std::abs(norm_integral(wf, 2 * kQuadraturePanels) - 1.0) <= 1e-8);
                CHECK(std::abs(norm_integral(wf, 4 * kQuadraturePanels) - 1.0) <= 1e-8);
            }
    }

    TEST_CASE("wavefunction satisfies the radial equation")
    {
        // R'' + k (E - V) R = 0 by central differences, relative to the kinetic scale.
        for (const char* name : {"HF", "I2", "O2+"}) {
            const auto& m = mol(name);
            const auto wf = radial_wavefunction(2, m);
            const double k = m.two_mu_over_hbar2();
            const double h = 1e-4;
            for (double r = m.r_e - 0.1; r <= m.r_e + 0.1; r += 0.01) {
                const double second = (wf(r + h) - 2.0 * wf(r) + wf(r - h)) / (h * h);
                const double potential_term = k * (wf.level.energy - th_potential(r, m)) * wf(r);
                const double scale = k * m.depth * (std::abs(wf(r)) + 1e-3 * std::abs(wf(m.r_e))) + std::abs(second);
                CAPTURE(name);
                CAPTURE(r);
                CHECK(std::abs(second + potential_term) <= 1e-5 * scale);
            }
        }
    }
}
