#pragma once

#include <functional>
#include <vector>

namespace thspec {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Composite Gauss-Legendre over [a, b] with equal-width panels.
double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           const GaussLegendreRule& rule);

} // namespace thspec
