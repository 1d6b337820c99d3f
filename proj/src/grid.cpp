#include "locdens/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "locdens/errors.hpp"
#include "locdens/quadrature.hpp"

namespace locdens {

MomentumGrid MomentumGrid::composite(double lo, double hi, int node_target) {
    if (!(hi > lo))
        throw ConfigError("momentum grid needs hi > lo");
    if (node_target < 2 * kNodesPerPanel)
        throw ConfigError("momentum grid needs at least " +
                          std::to_string(2 * kNodesPerPanel) + " nodes");

    MomentumGrid grid;
    grid.lo_ = lo;
    grid.hi_ = hi;
    const int total_panels = (node_target + kNodesPerPanel - 1) / kNodesPerPanel;

    // split the panel budget across the two sides of p = 0 when zero is
    // interior, keeping the edge pinned there
    std::vector<std::pair<double, int>> segments; // (left edge, panels), contiguous
    if (lo < 0.0 && hi > 0.0) {
        int left = std::max(1, static_cast<int>(std::lround(total_panels * (-lo) / (hi - lo))));
        left = std::min(left, total_panels - 1);
        segments = {{lo, left}, {0.0, total_panels - left}};
    } else {
        segments = {{lo, total_panels}};
    }

    grid.nodes_.reserve(static_cast<std::size_t>(total_panels) * kNodesPerPanel);
    grid.weights_.reserve(grid.nodes_.capacity());
    for (std::size_t s = 0; s < segments.size(); ++s) {
        const double a = segments[s].first;
        const double b = (s + 1 < segments.size()) ? segments[s + 1].first : hi;
        const int n = segments[s].second;
        const double h = (b - a) / n;
        grid.max_panel_width_ = std::max(grid.max_panel_width_, h);
        for (int k = 0; k < n; ++k)
            append_panel(a + k * h, a + (k + 1) * h, kNodesPerPanel, grid.nodes_,
                         grid.weights_);
    }
    grid.panels_ = total_panels;
    return grid;
}

MomentumGrid MomentumGrid::refined(int factor) const {
    if (factor < 1)
        throw PreconditionError("grid refinement factor must be >= 1");
    return composite(lo_, hi_, size() * factor);
}

bool MomentumGrid::same_nodes_as(const MomentumGrid& other) const {
    return nodes_ == other.nodes_;
}

std::vector<double> invariant_measure(const MomentumGrid& grid, const ModelParams& params) {
    params.validate();
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> mu(grid.nodes().size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double p = grid.nodes()[i];
        const double energy = on_shell_energy(p, params.mass);
        if (params.dim == 1) {
            mu[i] = grid.weights()[i] / (two_pi * 2.0 * energy);
        } else {
            // radial: 4 pi p^2 dp / ((2pi)^3 2E)
            mu[i] = grid.weights()[i] * 4.0 * std::numbers::pi * p * p /
                    (two_pi * two_pi * two_pi * 2.0 * energy);
        }
    }
    return mu;
}

} // namespace locdens
