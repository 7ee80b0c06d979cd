#pragma once

#include <stdexcept>
#include <string>

namespace thspec {

// Parametric Nikiforov-Uvarov engine for equations of the form
//
//   psi'' + (a1 - a2 s) / (s (1 - a3 s)) psi' + (-x1 s^2 + x2 s - x3) / (s (1 - a3 s))^2 psi = 0
//
// The engine is agnostic of what the coefficients encode; callers map a
// trial energy to an NUBase and root-find on energy_residual.

struct NUBase {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

struct NUCoefficients {
    NUBase base;
    double alpha4 = 0.0, alpha5 = 0.0, alpha6 = 0.0, alpha7 = 0.0, alpha8 = 0.0, alpha9 = 0.0;
    double sqrt_alpha8 = 0.0, sqrt_alpha9 = 0.0;
    double alpha10 = 0.0, alpha11 = 0.0, alpha12 = 0.0, alpha13 = 0.0;
    // second branch (k = k_plus)
    double alpha10s = 0.0, alpha11s = 0.0, alpha12s = 0.0, alpha13s = 0.0;
    double k_minus = 0.0, k_plus = 0.0;
};

/// alpha8 or alpha9 negative: the square roots have no real value.
class NoBoundBranch : public std::domain_error {
public:
    NoBoundBranch(std::string coefficient, double value);
    const std::string& coefficient() const noexcept { return coefficient_; }
    double value() const noexcept { return value_; }

private:
    std::string coefficient_;
    double value_;
};

NUCoefficients derive_coefficients(const NUBase& base);

/// Quantization condition for the k = k_minus branch; zero at an eigenvalue.
double energy_residual(int n, const NUCoefficients& c);

/// Quantization condition of the k = k_plus branch, with the n-dependence as
/// conventionally printed: -(2n-1) alpha5 and (2n+1)(sqrt a9 + a3 sqrt a8).
double energy_residual_second_branch(int n, const NUCoefficients& c);

/// Slope of tau(s); the method requires it to be negative.
double tau_prime(const NUCoefficients& c);

enum class Branch { first, second };

// psi(s) = s^p (1 - a3 s)^q P_n^{(a,b)}(1 - 2 a3 s), or for a3 = 0
// psi(s) = s^p exp(a13 s) L_n^{(order)}(scale s).
struct WavefunctionForm {
    double s_exponent = 0.0;
    double bracket_exponent = 0.0;
    double jacobi_a = 0.0;
    double jacobi_b = 0.0;
    double alpha3 = 0.0;  // argument map 1 - 2 alpha3 s
    bool laguerre_limit = false;
    double laguerre_order = 0.0;
    double laguerre_scale = 0.0;
    double exponential_rate = 0.0;  // alpha13 in exp(alpha13 s)
};

WavefunctionForm wavefunction_form(const NUCoefficients& c, Branch branch = Branch::first);

// Value carried as sign * exp(log_abs) so extreme exponents do not overflow.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;
    double value() const;
};

SignedLog evaluate_log(const WavefunctionForm& form, int n, double s);
double evaluate(const WavefunctionForm& form, int n, double s);

} // namespace thspec
