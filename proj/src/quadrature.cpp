#include "locdens/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "locdens/errors.hpp"

namespace locdens {

namespace {

// Newton iteration on the Legendre polynomial roots; standard gauleg.
GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

void append_panel(double a, double b, int n, std::vector<double>& out_nodes,
                  std::vector<double>& out_weights) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out_nodes.push_back(mid + half * rule.nodes[i]);
        out_weights.push_back(half * rule.weights[i]);
    }
}

IntegrationResult refining_integrate(const std::function<double(double)>& f, double a,
                                     double b, double rel_tol, double abs_floor,
                                     int initial_panels, int max_panels) {
    if (!(b > a))
        throw PreconditionError("refining_integrate: empty interval");
    const auto& rule = gauss_legendre(16);

    auto composite = [&](int panels) {
        const double h = (b - a) / panels;
        double acc = 0.0;
        for (int k = 0; k < panels; ++k) {
            const double lo = a + k * h;
            const double mid = lo + 0.5 * h;
            for (int i = 0; i < 16; ++i)
                acc += 0.5 * h * rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        }
        return acc;
    };

    int panels = initial_panels;
    double prev = composite(panels);
    while (panels <= max_panels) {
        panels *= 2;
        const double cur = composite(panels);
        const double delta = std::abs(cur - prev);
        if (delta <= rel_tol * std::max(std::abs(cur), abs_floor))
            return {cur, delta, panels};
        prev = cur;
    }
    throw DomainError("spatial quadrature did not converge to the requested "
                      "tolerance within the panel cap");
}

} // namespace locdens
