#include "thspec/nu_engine.hpp"

#include "thspec/constants.hpp"
#include "thspec/special_functions.hpp"

#include <cmath>
#include <sstream>

namespace thspec {

namespace {

std::string describe(const std::string& name, double value)
{
    std::ostringstream ss;
    ss.precision(17);
    ss << "no real bound-state branch: " << name << " = " << value << " < 0";
    return ss.str();
}

void require_finite(const NUBase& b)
{
    for (double v : {b.alpha1, b.alpha2, b.alpha3, b.xi1, b.xi2, b.xi3})
        if (!std::isfinite(v))
            throw DomainError("NUBase coefficients must be finite");
}

} // namespace

NoBoundBranch::NoBoundBranch(std::string coefficient, double value)
    : std::domain_error(describe(coefficient, value)), coefficient_(std::move(coefficient)), value_(value)
{
}

NUCoefficients derive_coefficients(const NUBase& base)
{
    require_finite(base);
    NUCoefficients c;
    c.base = base;
    const double a1 = base.alpha1, a2 = base.alpha2, a3 = base.alpha3;

    c.alpha4 = 0.5 * (1.0 - a1);
    c.alpha5 = 0.5 * (a2 - 2.0 * a3);
    c.alpha6 = c.alpha5 * c.alpha5 + base.xi1;
    c.alpha7 = 2.0 * c.alpha4 * c.alpha5 - base.xi2;
    c.alpha8 = c.alpha4 * c.alpha4 + base.xi3;
    c.alpha9 = a3 * c.alpha7 + a3 * a3 * c.alpha8 + c.alpha6;

    if (c.alpha8 < 0.0)
        throw NoBoundBranch("alpha8", c.alpha8);
    if (c.alpha9 < 0.0)
        throw NoBoundBranch("alpha9", c.alpha9);

    c.sqrt_alpha8 = std::sqrt(c.alpha8);
    c.sqrt_alpha9 = std::sqrt(c.alpha9);
    const double r8 = c.sqrt_alpha8, r9 = c.sqrt_alpha9;

    c.alpha10 = a1 + 2.0 * c.alpha4 + 2.0 * r8;
    c.alpha11 = a2 - 2.0 * c.alpha5 + 2.0 * (r9 + a3 * r8);
    c.alpha12 = c.alpha4 + r8;
    c.alpha13 = c.alpha5 - (r9 + a3 * r8);

    c.alpha10s = a1 + 2.0 * c.alpha4 - 2.0 * r8;
    c.alpha11s = a2 - 2.0 * c.alpha5 + 2.0 * (r9 - a3 * r8);
    c.alpha12s = c.alpha4 - r8;
    c.alpha13s = c.alpha5 - (r9 - a3 * r8);

    const double shift = -(c.alpha7 + 2.0 * a3 * c.alpha8);
    const double root = 2.0 * std::sqrt(c.alpha8 * c.alpha9);
    c.k_minus = shift - root;
    c.k_plus = shift + root;
    return c;
}

double energy_residual(int n, const NUCoefficients& c)
{
    if (n < 0)
        throw DomainError("energy_residual: n must be >= 0");
    const double a2 = c.base.alpha2, a3 = c.base.alpha3;
    const double m = 2.0 * n + 1.0;
    return a2 * n - m * c.alpha5 + m * (c.sqrt_alpha9 + a3 * c.sqrt_alpha8) + n * (n - 1.0) * a3 + c.alpha7 +
           2.0 * a3 * c.alpha8 + 2.0 * c.sqrt_alpha8 * c.sqrt_alpha9;
}

double energy_residual_second_branch(int n, const NUCoefficients& c)
{
    if (n < 0)
        throw DomainError("energy_residual_second_branch: n must be >= 0");
    const double a2 = c.base.alpha2, a3 = c.base.alpha3;
    return a2 * n - (2.0 * n - 1.0) * c.alpha5 + (2.0 * n + 1.0) * (c.sqrt_alpha9 + a3 * c.sqrt_alpha8) +
           n * (n - 1.0) * a3 + c.alpha7 + 2.0 * a3 * c.alpha8 - 2.0 * c.sqrt_alpha8 * c.sqrt_alpha9;
}

double tau_prime(const NUCoefficients& c)
{
    const double a3 = c.base.alpha3;
    return -2.0 * a3 - 2.0 * (c.sqrt_alpha9 + a3 * c.sqrt_alpha8);
}

WavefunctionForm wavefunction_form(const NUCoefficients& c, Branch branch)
{
    const bool first = branch == Branch::first;
    const double a10 = first ? c.alpha10 : c.alpha10s;
    const double a11 = first ? c.alpha11 : c.alpha11s;
    const double a12 = first ? c.alpha12 : c.alpha12s;
    const double a13 = first ? c.alpha13 : c.alpha13s;
    const double a3 = c.base.alpha3;

    WavefunctionForm f;
    f.s_exponent = a12;
    f.alpha3 = a3;
    f.jacobi_a = a10 - 1.0;
    if (a3 == 0.0) {
        f.laguerre_limit = true;
        f.laguerre_order = a10 - 1.0;
        f.laguerre_scale = a11;
        f.exponential_rate = a13;
    } else {
        f.bracket_exponent = -a12 - a13 / a3;
        f.jacobi_b = a11 / a3 - a10 - 1.0;
    }
    return f;
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog evaluate_log(const WavefunctionForm& form, int n, double s)
{
    if (!(s > 0.0))
        throw DomainError("wavefunction evaluation requires s > 0");
    double log_abs = form.s_exponent * std::log(s);
    double poly = 0.0;
    if (form.laguerre_limit) {
        log_abs += form.exponential_rate * s;
        poly = laguerre_poly(n, form.laguerre_order, form.laguerre_scale * s);
    } else {
        const double bracket = 1.0 - form.alpha3 * s;
        if (!(bracket > 0.0))
            throw DomainError("wavefunction evaluation requires 1 - alpha3 s > 0");
        log_abs += form.bracket_exponent * std::log1p(-form.alpha3 * s);
        poly = jacobi_poly(n, form.jacobi_a, form.jacobi_b, 1.0 - 2.0 * form.alpha3 * s);
    }
    if (poly == 0.0)
        return {0.0, 0};
    return {log_abs + std::log(std::abs(poly)), poly > 0.0 ? 1 : -1};
}

double evaluate(const WavefunctionForm& form, int n, double s) { return evaluate_log(form, n, s).value(); }

} // namespace thspec
