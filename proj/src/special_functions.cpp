#include "thspec/special_functions.hpp"

#include "thspec/constants.hpp"

#include <string>

namespace thspec {

double jacobi_poly(int n, double a, double b, double x)
{
    if (n < 0)
        throw DomainError("jacobi_poly: negative degree");
    if (n == 0)
        return 1.0;
    double p_prev = 1.0;
    double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
        if (denom == 0.0)
            throw DomainError("jacobi_poly: degenerate recurrence at k=" + std::to_string(k));
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = (c1 * p - c2 * p_prev) / denom;
        p_prev = p;
        p = next;
    }
    return p;
}

double laguerre_poly(int n, double a, double x)
{
    if (n < 0)
        throw DomainError("laguerre_poly: negative degree");
    if (n == 0)
        return 1.0;
    double l_prev = 1.0;
    double l = 1.0 + a - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + a - x) * l - (k - 1.0 + a) * l_prev) / k;
        l_prev = l;
        l = next;
    }
    return l;
}

} // namespace thspec
