#ifndef LOCDENS_DENSITY_HPP
#define LOCDENS_DENSITY_HPP

#include <vector>

#include "locdens/state.hpp"
#include "locdens/transform.hpp"
#include "locdens/types.hpp"

namespace locdens {

/// Real density samples over a spatial grid at fixed t.
/// total_mass_hint is the quadrature of the density over all space
/// (computed on the auto-extended domain, not just the sample points).
struct DensityProfile {
    std::vector<double> points;
    double t = 0.0;
    std::vector<double> values;
    Prescription prescription = Prescription::Povm;
    double total_mass_hint = 0.0;
};

/// <Psi|T00(x,t)|Psi> = |grad psi|^2 + |dt psi|^2 + m^2 |psi|^2 from the
/// Plain field. Integrates over all space to <H>.
DensityProfile energy_density(const MomentumState& s, const std::vector<double>& points,
                              double t);

/// Energy density divided by <H>.
DensityProfile naive_probability_density(const MomentumState& s,
                                         const std::vector<double>& points, double t);

/// POVM density: the same quadratic form evaluated on the Tilde field
/// (psi weighted by E^(-1/2)). Integrates to one.
DensityProfile povm_density(const MomentumState& s, const std::vector<double>& points,
                            double t);

/// |psi_NW(x,t)|^2.
DensityProfile nw_density(const MomentumState& s, const std::vector<double>& points,
                          double t);

DensityProfile density_profile(const MomentumState& s, Prescription presc,
                               const std::vector<double>& points, double t);

/// Mixture profile. Povm / NewtonWigner / EnergyDensityRaw: pointwise convex
/// combination of the component profiles. NaiveNormalized: the ratio form
/// (sum_i a_i E_i(x,t)) / (sum_i a_i <H>_i).
DensityProfile mixture_density(const MixedState& mix, const std::vector<double>& points,
                               double t, Prescription presc);

/// Cheap repeated evaluation of one density at fixed time.
class DensityEvaluator {
  public:
    DensityEvaluator(const MomentumState& s, Prescription presc, double t);
    double operator()(double x) const;

  private:
    FieldEvaluator field_;
    FieldEvaluator::TimeSlice slice_;
    Prescription presc_;
    double inv_mean_energy_ = 1.0;
};

/// Spatial interval (dim=1) or radial range (dim=3) that contains the
/// density up to boundary values below 1e-14 of the peak.
Interval auto_domain(const MomentumState& s, Prescription presc, double t);

/// Adaptive quadrature of the density over [iv.lo, iv.hi]; panels are
/// refined until successive refinements agree to rel_tol. dim=3 integrates
/// with the 4 pi r^2 volume weight.
double integrate_density(const MomentumState& s, Prescription presc, double t,
                         Interval iv, double rel_tol = 1e-8);

/// Probability of the region under the given prescription.
/// Pure states: quadrature of the density over the region (the domain is
/// evaluated directly, never truncated to a precomputed window).
double region_probability(const MomentumState& s, const Region& region, double t,
                          Prescription presc);

/// Mixtures: Povm / NewtonWigner use the linear rule  sum_i a_i P_i;
/// NaiveNormalized uses the ratio form.
double region_probability(const MixedState& mix, const Region& region, double t,
                          Prescription presc);

/// Integral of a sampled profile by trapezoid over its own points
/// (dim=3 applies the 4 pi r^2 weight).
double profile_trapezoid_mass(const DensityProfile& profile, int dim);

} // namespace locdens

#endif
