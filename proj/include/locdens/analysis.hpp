#ifndef LOCDENS_ANALYSIS_HPP
#define LOCDENS_ANALYSIS_HPP

#include <vector>

#include "locdens/density.hpp"
#include "locdens/state.hpp"

namespace locdens {

/// Least-squares line through (r, ln p) over a window; the density is
/// modeled as ~ exp(-2 gamma r), so gamma_hat = -slope / 2.
struct TailFit {
    double r_lo = 0.0, r_hi = 0.0;
    double slope = 0.0;
    double gamma_hat = 0.0;
    double residual_rms = 0.0;    ///< RMS of the log-space fit residual
    double slope_stderr = 0.0;    ///< OLS standard error of the slope
    double gamma_stderr = 0.0;    ///< slope_stderr / 2
    int n_points = 0;
};

/// Fits the profile samples falling inside [window.lo, window.hi]. Needs at
/// least 8 strictly positive samples there; nonpositive values mean the
/// quadrature noise floor was reached and the caller should shrink the
/// window or raise the resolution.
TailFit fit_tail(const DensityProfile& profile, Interval window);

/// Quantile front radii: R_q(t) is the smallest origin-centered radius
/// containing probability 1 - q. speeds[i] = (R(t_i) - R(0)) / t_i.
struct FrontSpeedReport {
    double q = 0.0;
    std::vector<double> times;  ///< includes the implicit t = 0 entry first
    std::vector<double> radii;
    std::vector<double> speeds; ///< one entry per positive time
};

/// q in [1e-6, 0.5]; times strictly increasing and positive.
/// sample_points controls the density of the cumulative grid.
FrontSpeedReport front_speed(const MomentumState& s, Prescription presc, double q,
                             const std::vector<double>& times, int sample_points = 4001);

struct NarrowEnergyRow {
    double spread_ratio = 0.0; ///< Delta E / <E>
    double l1_distance = 0.0;  ///< integral |p_naive - p_povm| dx
};

/// L1 distance between the naive and POVM densities for a family of states
/// sorted by decreasing Delta E / <E>.
std::vector<NarrowEnergyRow> narrow_energy_study(const std::vector<MomentumState>& family,
                                                 double t, int sample_points = 3001);

struct LocalizationRow {
    double width = 0.0;   ///< dim=1: interval length; dim=3: cbrt(volume)
    double mean_energy = 0.0;
    double product = 0.0; ///< width * <E>
};

/// Smallest centered region holding mass fraction q of the POVM density at
/// t = 0, per state; reports width_q * <E>.
std::vector<LocalizationRow> localization_bound_scan(const std::vector<MomentumState>& family,
                                                     double q = 0.9,
                                                     int sample_points = 4001);

/// L1 distance between the mixture density and the convex combination of
/// component densities. Nonzero only for NaiveNormalized (the ratio form);
/// identically zero for Povm by linearity.
double convexity_gap(const MixedState& mix, Prescription presc, double t,
                     int sample_points = 2001);

} // namespace locdens

#endif
