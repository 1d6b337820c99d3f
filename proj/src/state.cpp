#include "locdens/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locdens/errors.hpp"

namespace locdens {

namespace {

double gaussian_profile(double p, double p0, double sigma) {
    const double d = (p - p0) / (2.0 * sigma);
    return std::exp(-d * d);
}

} // namespace

MomentumState MomentumState::gaussian(const ModelParams& params, double p0, double sigma,
                                      const GridSpec& spec) {
    params.validate();
    if (!(sigma > 0.0))
        throw ConfigError("gaussian state needs sigma > 0");
    if (params.dim == 3 && p0 < 0.0)
        throw ConfigError("radial gaussian needs p0 >= 0");
    if (!(spec.tail_eps > 0.0) || spec.tail_eps >= 1.0)
        throw ConfigError("tail_eps must lie in (0, 1)");

    // |psi(p0 +/- margin)| = tail_eps * max
    const double margin = 2.0 * sigma * std::sqrt(std::log(1.0 / spec.tail_eps));
    double lo, hi;
    if (params.dim == 1) {
        lo = p0 - margin;
        hi = p0 + margin;
    } else {
        lo = std::max(0.0, p0 - margin);
        hi = p0 + margin;
    }
    if (spec.cutoff > 0.0) {
        // explicit cutoff: check it actually satisfies the tail rule
        const double edge = gaussian_profile(spec.cutoff, p0, sigma);
        if (edge >= spec.tail_eps) {
            std::ostringstream msg;
            msg << "cutoff rule violated: |psi(P)|/max = " << edge << " >= tail_eps = "
                << spec.tail_eps << " at P = " << spec.cutoff
                << " (need P >= p0 + 2 sigma sqrt(ln(1/tail_eps)) = " << p0 + margin << ")";
            throw ConfigError(msg.str());
        }
        hi = spec.cutoff;
        lo = (params.dim == 1) ? -spec.cutoff : 0.0;
        if (params.dim == 1 && gaussian_profile(lo, p0, sigma) >= spec.tail_eps) {
            std::ostringstream msg;
            msg << "cutoff rule violated at the lower edge: |psi(-P)|/max = "
                << gaussian_profile(lo, p0, sigma) << " >= tail_eps = " << spec.tail_eps;
            throw ConfigError(msg.str());
        }
    }

    if (params.mass == 0.0) {
        // singular 1/2E measure at p = 0 must be suppressed by the packet
        const double at_zero = gaussian_profile(0.0, p0, sigma);
        if (at_zero >= 1e-6) {
            std::ostringstream msg;
            msg << "massless state requires |psi(0)| < 1e-6 * max|psi|; got " << at_zero
                << " (p0 = " << p0 << ", sigma = " << sigma << ")";
            throw ConfigError(msg.str());
        }
    }

    MomentumGrid grid = MomentumGrid::composite(lo, hi, spec.nodes);
    if (grid.max_panel_width() > 2.0 * sigma) {
        std::ostringstream msg;
        msg << "momentum resolution too coarse for sigma = " << sigma
            << ": panel width " << grid.max_panel_width() << " exceeds 2 sigma = "
            << 2.0 * sigma << "; raise GridSpec.nodes above "
            << static_cast<int>((hi - lo) / (2.0 * sigma) * MomentumGrid::kNodesPerPanel) + MomentumGrid::kNodesPerPanel;
        throw ConfigError(msg.str());
    }

    std::vector<cplx> values(grid.nodes().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = gaussian_profile(grid.nodes()[i], p0, sigma);

    MomentumState s = from_samples(params, std::move(grid), std::move(values), true);
    const double norm = std::abs(s.values_[0]) /
                        gaussian_profile(s.grid_.nodes()[0], p0, sigma);
    s.tag_ = GaussianTag{p0, sigma, norm};
    return s;
}

MomentumState MomentumState::from_samples(const ModelParams& params, MomentumGrid grid,
                                          std::vector<cplx> values, bool normalize) {
    params.validate();
    if (values.size() != grid.nodes().size())
        throw PreconditionError("state sample count does not match the grid");
    MomentumState s;
    s.params_ = params;
    s.grid_ = std::move(grid);
    s.values_ = std::move(values);
    s.measure_ = invariant_measure(s.grid_, params);
    if (normalize) {
        const double n2 = s.norm_squared();
        if (!(n2 > 0.0) || !std::isfinite(n2))
            throw PreconditionError("state has vanishing or non-finite norm");
        const double scale = 1.0 / std::sqrt(n2);
        for (auto& v : s.values_)
            v *= scale;
        s.normalized_ = true;
    }
    return s;
}

double MomentumState::norm_squared() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        acc += measure_[i] * std::norm(values_[i]);
    return acc;
}

MomentumState MomentumState::refined(int factor) const {
    return resampled(grid_.refined(factor));
}

MomentumState MomentumState::resampled(const MomentumGrid& grid) const {
    if (!tag_)
        throw PreconditionError("state carries no closed form to resample");
    std::vector<cplx> values(grid.nodes().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = tag_->norm * gaussian_profile(grid.nodes()[i], tag_->p0, tag_->sigma);
    MomentumState s = from_samples(params_, grid, std::move(values), false);
    s.normalized_ = normalized_; // norm constant is kept from the original grid
    s.tag_ = tag_;
    return s;
}

MomentumState MomentumState::phase_advanced(double dt) const {
    MomentumState s = *this;
    for (std::size_t i = 0; i < s.values_.size(); ++i) {
        const double energy = on_shell_energy(grid_.nodes()[i], params_.mass);
        s.values_[i] *= std::polar(1.0, -energy * dt);
    }
    s.tag_.reset(); // samples no longer match the closed form
    return s;
}

double MomentumState::peak_value() const {
    double peak = 0.0;
    for (const auto& v : values_)
        peak = std::max(peak, std::abs(v));
    return peak;
}

double MomentumState::value_near_zero() const {
    if (tag_)
        return tag_->norm * gaussian_profile(0.0, tag_->p0, tag_->sigma);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (std::abs(grid_.nodes()[i]) < std::abs(grid_.nodes()[best]))
            best = i;
    return std::abs(values_[best]);
}

cplx inner_product(const MomentumState& a, const MomentumState& b) {
    if (!(a.params() == b.params()))
        throw IncompatibilityError("inner_product: states differ in mass or dimension");
    if (a.grid().same_nodes_as(b.grid())) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < a.values().size(); ++i)
            acc += a.measure()[i] * std::conj(a.values()[i]) * b.values()[i];
        return acc;
    }
    if (!a.gaussian_tag() || !b.gaussian_tag())
        throw IncompatibilityError(
            "inner_product: grids differ and the states carry no closed form "
            "to evaluate on a common grid");
    // union domain at the finer of the two node densities
    const double lo = std::min(a.grid().lo(), b.grid().lo());
    const double hi = std::max(a.grid().hi(), b.grid().hi());
    const double density = std::max(a.grid().size() / (a.grid().hi() - a.grid().lo()),
                                    b.grid().size() / (b.grid().hi() - b.grid().lo()));
    const int nodes = static_cast<int>(std::ceil((hi - lo) * density));
    const MomentumGrid common = MomentumGrid::composite(lo, hi, nodes);
    return inner_product(a.resampled(common), b.resampled(common));
}

double energy_moment(const MomentumState& s, int k) {
    if (k < 0)
        throw PreconditionError("energy_moment needs k >= 0");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.values().size(); ++i) {
        const double energy = on_shell_energy(s.grid().nodes()[i], s.params().mass);
        acc += s.measure()[i] * std::norm(s.values()[i]) * std::pow(energy, k);
    }
    return acc;
}

double energy_spread_ratio(const MomentumState& s) {
    const double e1 = energy_moment(s, 1);
    const double e2 = energy_moment(s, 2);
    return std::sqrt(std::max(0.0, e2 - e1 * e1)) / e1;
}

double mean_velocity(const MomentumState& s) {
    if (s.params().dim != 1)
        return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < s.values().size(); ++i) {
        const double p = s.grid().nodes()[i];
        acc += s.measure()[i] * std::norm(s.values()[i]) * p /
               on_shell_energy(p, s.params().mass);
    }
    return acc;
}

MixedState mix(std::vector<MixedState::Component> components) {
    if (components.empty())
        throw PreconditionError("mixture needs at least one component");
    double total = 0.0;
    for (const auto& c : components) {
        if (!(c.weight > 0.0))
            throw PreconditionError("mixture weights must be positive");
        if (!(c.state.params() == components.front().state.params()))
            throw IncompatibilityError("mixture components differ in mass or dimension");
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "mixture weights sum to " << total << ", expected 1 within 1e-12";
        throw PreconditionError(msg.str());
    }
    MixedState m;
    m.components_ = std::move(components);
    return m;
}

} // namespace locdens
