#include "locdens/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "locdens/errors.hpp"
#include "locdens/quadrature.hpp"

namespace locdens {

namespace {

FieldKind kind_for(Prescription presc) {
    switch (presc) {
    case Prescription::EnergyDensityRaw:
    case Prescription::NaiveNormalized:
        return FieldKind::Plain;
    case Prescription::Povm:
        return FieldKind::Tilde;
    case Prescription::NewtonWigner:
        return FieldKind::NewtonWigner;
    }
    throw PreconditionError("unknown prescription");
}

/// dim=3 densities are integrated with the 4 pi r^2 volume weight.
double volume_weight(int dim, double r) {
    return dim == 1 ? 1.0 : 4.0 * std::numbers::pi * r * r;
}

} // namespace

DensityEvaluator::DensityEvaluator(const MomentumState& s, Prescription presc, double t)
    : field_(s, kind_for(presc)), slice_(field_.slice(t)), presc_(presc) {
    if (presc == Prescription::NaiveNormalized)
        inv_mean_energy_ = 1.0 / energy_moment(s, 1);
}

double DensityEvaluator::operator()(double x) const {
    if (presc_ == Prescription::NewtonWigner)
        return std::norm(slice_.at(x).value);
    const double q = slice_.density_quadratic_form(x);
    return presc_ == Prescription::NaiveNormalized ? q * inv_mean_energy_ : q;
}

Interval auto_domain(const MomentumState& s, Prescription presc, double t) {
    const int dim = s.params().dim;
    DensityEvaluator dens(s, presc, t);

    // initial window from the packet's momentum spread and drift
    const double e1 = energy_moment(s, 1);
    const double e2 = energy_moment(s, 2);
    const double p_spread = std::sqrt(std::max(e2 - e1 * e1, 1e-12)) + 1e-6;
    const double width0 = std::max(6.0 / (2.0 * p_spread), 1.0) + 1.05 * std::abs(t) + 2.0;
    const double center = (dim == 1) ? mean_velocity(s) * t : 0.0;

    double lo = (dim == 1) ? center - width0 : 0.0;
    double hi = center + width0;

    auto peak_over = [&](double a, double b) {
        double peak = 0.0;
        const int kProbe = 65;
        for (int i = 0; i < kProbe; ++i)
            peak = std::max(peak, dens(a + (b - a) * i / (kProbe - 1.0)));
        return peak;
    };
    double peak = peak_over(lo, hi);
    if (!(peak > 0.0))
        throw DomainError("auto_domain: density vanished on the initial window");

    const double cut = 1e-14;
    for (int iter = 0; iter < 48; ++iter) {
        bool grew = false;
        const double step = 0.5 * (hi - lo);
        if (dim == 1 && dens(lo) > cut * peak) {
            lo -= step;
            grew = true;
        }
        if (dens(hi) > cut * peak) {
            hi += step;
            grew = true;
        }
        if (!grew)
            return {lo, hi};
        peak = std::max(peak, peak_over(lo, hi));
    }
    // exponential tails always terminate above; power-law noise floors
    // (suppressed massless states) can stall at ~1e-14 of the peak, which
    // is already below every tolerance used downstream
    return {lo, hi};
}

double integrate_density(const MomentumState& s, Prescription presc, double t,
                         Interval iv, double rel_tol) {
    const int dim = s.params().dim;
    DensityEvaluator dens(s, presc, t);
    auto f = [&](double x) { return volume_weight(dim, x) * dens(x); };
    const int initial = std::max(8, static_cast<int>((iv.hi - iv.lo) / 2.0));
    return refining_integrate(f, iv.lo, iv.hi, rel_tol, 1e-300, initial).value;
}

namespace {

DensityProfile make_profile(const MomentumState& s, Prescription presc,
                            const std::vector<double>& points, double t) {
    if (s.params().dim == 3)
        for (double r : points)
            if (r < 0.0)
                throw PreconditionError("radial sample points must be >= 0");

    DensityProfile profile;
    profile.points = points;
    profile.t = t;
    profile.prescription = presc;
    profile.values.resize(points.size());

    DensityEvaluator dens(s, presc, t);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i)
        profile.values[i] = dens(points[i]);

    profile.total_mass_hint = integrate_density(s, presc, t, auto_domain(s, presc, t));
    return profile;
}

} // namespace

DensityProfile energy_density(const MomentumState& s, const std::vector<double>& points,
                              double t) {
    return make_profile(s, Prescription::EnergyDensityRaw, points, t);
}

DensityProfile naive_probability_density(const MomentumState& s,
                                         const std::vector<double>& points, double t) {
    return make_profile(s, Prescription::NaiveNormalized, points, t);
}

DensityProfile povm_density(const MomentumState& s, const std::vector<double>& points,
                            double t) {
    return make_profile(s, Prescription::Povm, points, t);
}

DensityProfile nw_density(const MomentumState& s, const std::vector<double>& points,
                          double t) {
    return make_profile(s, Prescription::NewtonWigner, points, t);
}

DensityProfile density_profile(const MomentumState& s, Prescription presc,
                               const std::vector<double>& points, double t) {
    return make_profile(s, presc, points, t);
}

DensityProfile mixture_density(const MixedState& mix, const std::vector<double>& points,
                               double t, Prescription presc) {
    const auto& comps = mix.components();
    DensityProfile profile;
    profile.points = points;
    profile.t = t;
    profile.prescription = presc;
    profile.values.assign(points.size(), 0.0);

    if (presc == Prescription::NaiveNormalized) {
        // ratio form: (sum_i a_i E_i(x,t)) / (sum_i a_i <H>_i)
        double mean_h = 0.0;
        for (const auto& c : comps)
            mean_h += c.weight * energy_moment(c.state, 1);
        double hint = 0.0;
        for (const auto& c : comps) {
            const DensityProfile part = energy_density(c.state, points, t);
            for (std::size_t i = 0; i < points.size(); ++i)
                profile.values[i] += c.weight * part.values[i];
            hint += c.weight * part.total_mass_hint;
        }
        for (auto& v : profile.values)
            v /= mean_h;
        profile.total_mass_hint = hint / mean_h;
        return profile;
    }

    // linear in the density operator: pointwise convex combination
    double hint = 0.0;
    for (const auto& c : comps) {
        const DensityProfile part = make_profile(c.state, presc, points, t);
        for (std::size_t i = 0; i < points.size(); ++i)
            profile.values[i] += c.weight * part.values[i];
        hint += c.weight * part.total_mass_hint;
    }
    profile.total_mass_hint = hint;
    return profile;
}

namespace {

void require_probability_prescription(Prescription presc) {
    if (presc == Prescription::EnergyDensityRaw)
        throw PreconditionError(
            "region_probability needs a normalized prescription "
            "(naive, povm or nw); the raw energy density is not a probability");
}

} // namespace

double region_probability(const MomentumState& s, const Region& region, double t,
                          Prescription presc) {
    require_probability_prescription(presc);
    region.validate(s.params().dim);
    double acc = 0.0;
    for (const auto& part : region.parts)
        acc += integrate_density(s, presc, t, {part.lo, part.hi});
    return acc;
}

double region_probability(const MixedState& mix, const Region& region, double t,
                          Prescription presc) {
    require_probability_prescription(presc);
    region.validate(mix.params().dim);
    const auto& comps = mix.components();

    if (presc == Prescription::NaiveNormalized) {
        // integral of the ratio form over the region
        double num = 0.0, den = 0.0;
        for (const auto& c : comps) {
            den += c.weight * energy_moment(c.state, 1);
            for (const auto& part : region.parts)
                num += c.weight * integrate_density(c.state, Prescription::EnergyDensityRaw,
                                                    t, {part.lo, part.hi});
        }
        return num / den;
    }

    double acc = 0.0;
    for (const auto& c : comps)
        acc += c.weight * region_probability(c.state, region, t, presc);
    return acc;
}

double profile_trapezoid_mass(const DensityProfile& profile, int dim) {
    const auto& x = profile.points;
    const auto& v = profile.values;
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double fa = volume_weight(dim, x[i - 1]) * v[i - 1];
        const double fb = volume_weight(dim, x[i]) * v[i];
        acc += 0.5 * (fa + fb) * (x[i] - x[i - 1]);
    }
    return acc;
}

} // namespace locdens
