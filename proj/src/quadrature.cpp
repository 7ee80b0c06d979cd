#include "thspec/quadrature.hpp"

#include "thspec/constants.hpp"

#include <cmath>
#include <numbers>

namespace thspec {

GaussLegendreRule gauss_legendre(int order)
{
    if (order < 1)
        throw DomainError("gauss_legendre: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_order.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = order * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16)
                break;
        }
        // Recompute derivative at the converged node for the weight.
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= order; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = order * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1)
        rule.nodes[order / 2] = 0.0;
    return rule;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           const GaussLegendreRule& rule)
{
    if (panels < 1)
        throw DomainError("integrate_composite: panels must be >= 1");
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        const double half = 0.5 * width;
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * sum;
    }
    return total;
}

} // namespace thspec
