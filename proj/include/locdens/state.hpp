#ifndef LOCDENS_STATE_HPP
#define LOCDENS_STATE_HPP

#include <optional>
#include <vector>

#include "locdens/grid.hpp"
#include "locdens/types.hpp"

namespace locdens {

/// One-particle momentum-space state over the invariant measure,
/// normalized so that  integral dmu(p) |psi(p)|^2 = 1.
///
/// States are node samples plus an optional closed-form tag, so tests can
/// re-evaluate the same state on refined grids.
class MomentumState {
  public:
    struct GaussianTag {
        double p0 = 0.0;
        double sigma = 1.0;
        double norm = 1.0; ///< prefactor fixed by quadrature on the original grid
    };

    /// Normalized wavepacket psi(p) = N exp(-(p - p0)^2 / (4 sigma^2)).
    /// dim=1 builds the grid on [p0 - D, p0 + D] with D from the tail rule;
    /// dim=3 restricts to p >= 0. Massless states must have psi(0)
    /// suppressed below 1e-6 of the peak.
    static MomentumState gaussian(const ModelParams& params, double p0, double sigma,
                                  const GridSpec& spec = {});

    /// State from explicit samples; normalizes when requested.
    static MomentumState from_samples(const ModelParams& params, MomentumGrid grid,
                                      std::vector<cplx> values, bool normalize);

    const ModelParams& params() const { return params_; }
    const MomentumGrid& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return values_; }
    /// Invariant-measure quadrature weights matching values().
    const std::vector<double>& measure() const { return measure_; }
    bool normalized() const { return normalized_; }
    const std::optional<GaussianTag>& gaussian_tag() const { return tag_; }

    /// integral dmu |psi|^2 evaluated on this grid.
    double norm_squared() const;

    /// Same closed-form state on a grid with `factor` times the nodes.
    /// Requires a closed-form tag.
    MomentumState refined(int factor) const;

    /// Closed-form values re-evaluated on an arbitrary grid (keeps the
    /// normalization constant fixed on the original grid).
    MomentumState resampled(const MomentumGrid& grid) const;

    /// psi(p) -> psi(p) exp(-i E(p) dt). Drops the closed-form tag.
    MomentumState phase_advanced(double dt) const;

    /// Largest |psi| over the nodes.
    double peak_value() const;
    /// |psi| at p = 0 (from the tag if present, else the node nearest zero).
    double value_near_zero() const;

  private:
    ModelParams params_;
    MomentumGrid grid_;
    std::vector<cplx> values_;
    std::vector<double> measure_;
    bool normalized_ = false;
    std::optional<GaussianTag> tag_;
};

/// <a|b> = integral dmu(p) conj(psi_a) psi_b. States must share mass and
/// dimension; differing grids are reconciled through the closed-form tags.
cplx inner_product(const MomentumState& a, const MomentumState& b);

/// integral dmu |psi|^2 E(p)^k.
double energy_moment(const MomentumState& s, int k);

/// Delta E / <E> = sqrt(<E^2> - <E>^2) / <E>.
double energy_spread_ratio(const MomentumState& s);

/// Mean group velocity <p/E> (dim=1 only; zero for radial states).
double mean_velocity(const MomentumState& s);

/// Convex mixture of pure states. Never collapsed to a single wavefunction.
class MixedState {
  public:
    struct Component {
        double weight;
        MomentumState state;
    };

    const std::vector<Component>& components() const { return components_; }
    const ModelParams& params() const { return components_.front().state.params(); }

    friend MixedState mix(std::vector<Component> components);

  private:
    std::vector<Component> components_;
};

/// Validates weights (> 0, summing to 1 within 1e-12) and shared params.
MixedState mix(std::vector<MixedState::Component> components);

} // namespace locdens

#endif
