#ifndef LOCDENS_QUADRATURE_HPP
#define LOCDENS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace locdens {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the n-point rule, computed once and cached.
const GaussLegendreRule& gauss_legendre(int n);

/// Nodes/weights of an n-point rule mapped to [a, b], appended to out_*.
void append_panel(double a, double b, int n, std::vector<double>& out_nodes,
                  std::vector<double>& out_weights);

struct IntegrationResult {
    double value = 0.0;
    double last_delta = 0.0; // |I_k - I_{k-1}| of the final refinement
    int panels = 0;
};

/// Integrates f over [a, b] with composite 16-point Gauss-Legendre panels,
/// doubling the panel count until two successive refinements agree to
/// rel_tol (relative to max(|I|, abs_floor)). Throws DomainError if the cap
/// is reached without agreement.
IntegrationResult refining_integrate(const std::function<double(double)>& f,
                                     double a, double b, double rel_tol = 1e-8,
                                     double abs_floor = 1e-300,
                                     int initial_panels = 8,
                                     int max_panels = 1 << 14);

} // namespace locdens

#endif
