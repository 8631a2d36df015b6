#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "superrad/errors.hpp"

namespace superrad::quad {

namespace detail {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// computed once by Newton iteration on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussRule make_gauss_legendre(std::size_t n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative via the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline const GaussRule& gauss16() {
    static const GaussRule rule = make_gauss_legendre(16);
    return rule;
}

template <typename F>
double gauss_panels(F&& f, double a, double b, std::size_t panels) {
    const GaussRule& rule = gauss16();
    const double h = (b - a) / static_cast<double>(panels);
    // Kahan-compensated accumulation; panel counts can get large.
    double sum = 0.0, comp = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double term = rule.weights[i] * f(mid + half * rule.nodes[i]) * half;
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

} // namespace detail

// Integrates f over [a, b] with composite 16-point Gauss-Legendre panels,
// doubling the panel count until two successive estimates agree to the
// requested tolerance. Suitable for integrands that are smooth on [a, b].
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                 std::size_t max_panels = (1u << 15)) {
    if (a == b) return 0.0;
    std::size_t panels = 4;
    double prev = detail::gauss_panels(f, a, b, panels);
    while (panels < max_panels) {
        panels *= 2;
        const double cur = detail::gauss_panels(f, a, b, panels);
        const double err = std::abs(cur - prev);
        if (err <= std::max(abs_tol, rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    throw numerical_error("quadrature failed to converge on [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
}

} // namespace superrad::quad
