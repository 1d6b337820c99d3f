#ifndef LOCDENS_GRID_HPP
#define LOCDENS_GRID_HPP

#include <vector>

#include "locdens/types.hpp"

namespace locdens {

/// How to discretize the momentum domain.
struct GridSpec {
    int nodes = 2048;       ///< target node count (rounded up to whole panels)
    double cutoff = 0.0;    ///< explicit |p| cutoff; 0 = derive from tail rule
    double tail_eps = 1e-12; ///< cutoff rule: |psi(P)| < tail_eps * max|psi|
};

/// Composite Gauss-Legendre grid over a finite momentum interval.
/// dim=1 uses a signed interval [lo, hi]; dim=3 a radial one with lo >= 0.
/// A panel edge is pinned at p = 0 whenever zero lies inside the domain, so
/// the |p| kink of the massless dispersion never crosses a panel.
class MomentumGrid {
  public:
    static constexpr int kNodesPerPanel = 16;

    MomentumGrid() = default;
    static MomentumGrid composite(double lo, double hi, int node_target);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    int panels() const { return panels_; }
    double max_panel_width() const { return max_panel_width_; }

    /// Same domain, node count multiplied by `factor`.
    MomentumGrid refined(int factor) const;

    /// Plain dp quadrature of f over the grid domain.
    template <class F> double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(nodes_[i]);
        return acc;
    }

    bool same_nodes_as(const MomentumGrid& other) const;

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    double lo_ = 0.0, hi_ = 0.0;
    int panels_ = 0;
    double max_panel_width_ = 0.0;
};

/// Quadrature weights of the Lorentz-invariant measure on the grid:
///   dim=1:  w_i / (2pi * 2E(p_i))
///   dim=3:  w_i * 4pi p_i^2 / ((2pi)^3 * 2E(p_i))   (angular part done)
std::vector<double> invariant_measure(const MomentumGrid& grid, const ModelParams& params);

} // namespace locdens

#endif
