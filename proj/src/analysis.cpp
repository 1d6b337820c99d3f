#include "locdens/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "locdens/errors.hpp"

namespace locdens {

TailFit fit_tail(const DensityProfile& profile, Interval window) {
    if (!(window.lo < window.hi))
        throw PreconditionError("fit_tail window needs r_lo < r_hi");

    std::vector<double> r, y;
    for (std::size_t i = 0; i < profile.points.size(); ++i) {
        const double x = profile.points[i];
        if (x < window.lo || x > window.hi)
            continue;
        const double v = profile.values[i];
        if (!(v > 0.0))
            throw PreconditionError(
                "fit_tail: nonpositive density inside the window (quadrature noise "
                "floor reached); shrink the window or raise the resolution");
        r.push_back(x);
        y.push_back(std::log(v));
    }
    const int n = static_cast<int>(r.size());
    if (n < 8)
        throw PreconditionError("fit_tail needs at least 8 profile samples in the window");

    double rm = 0.0, ym = 0.0;
    for (int i = 0; i < n; ++i) {
        rm += r[i];
        ym += y[i];
    }
    rm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (r[i] - rm) * (r[i] - rm);
        sxy += (r[i] - rm) * (y[i] - ym);
    }
    const double slope = sxy / sxx;
    const double intercept = ym - slope * rm;

    double ssr = 0.0;
    for (int i = 0; i < n; ++i) {
        const double res = y[i] - (intercept + slope * r[i]);
        ssr += res * res;
    }

    TailFit fit;
    fit.r_lo = window.lo;
    fit.r_hi = window.hi;
    fit.slope = slope;
    fit.gamma_hat = -0.5 * slope;
    fit.residual_rms = std::sqrt(ssr / n);
    fit.slope_stderr = std::sqrt(ssr / std::max(1, n - 2) / sxx);
    fit.gamma_stderr = 0.5 * fit.slope_stderr;
    fit.n_points = n;
    return fit;
}

namespace {

/// Dense cumulative of the density from the origin outward; dim=1 sums both
/// half-lines, dim=3 integrates shells. Returns (radii, cumulative mass).
struct CumulativeMass {
    std::vector<double> radius;
    std::vector<double> mass;

    double invert(double target) const {
        if (target <= 0.0)
            return 0.0;
        if (mass.back() < target)
            throw DomainError("cumulative inversion ran out of domain: reached " +
                              std::to_string(mass.back()) + " of target " +
                              std::to_string(target) + "; extend the spatial domain");
        auto it = std::lower_bound(mass.begin(), mass.end(), target);
        const std::size_t i = static_cast<std::size_t>(it - mass.begin());
        if (i == 0)
            return radius.front();
        const double f = (target - mass[i - 1]) / (mass[i] - mass[i - 1]);
        return radius[i - 1] + f * (radius[i] - radius[i - 1]);
    }
};

CumulativeMass cumulative_from_origin(const MomentumState& s, Prescription presc,
                                      double t, int sample_points) {
    const int dim = s.params().dim;
    const Interval dom = auto_domain(s, presc, t);
    const double rmax = std::max(std::abs(dom.lo), std::abs(dom.hi));
    const int n = std::max(sample_points, 257);

    DensityEvaluator dens(s, presc, t);
    std::vector<double> radius(n), f(n);
    for (int i = 0; i < n; ++i)
        radius[i] = rmax * i / (n - 1.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double r = radius[i];
        if (dim == 1)
            f[i] = dens(r) + (r > 0.0 ? dens(-r) : 0.0);
        else
            f[i] = 4.0 * std::numbers::pi * r * r * dens(r);
    }
    // dim=1: f(0) counted once (point set {0} has measure zero)
    CumulativeMass cum;
    cum.radius = radius;
    cum.mass.resize(n);
    cum.mass[0] = 0.0;
    for (int i = 1; i < n; ++i)
        cum.mass[i] = cum.mass[i - 1] +
                      0.5 * (f[i] + f[i - 1]) * (radius[i] - radius[i - 1]);
    return cum;
}

} // namespace

FrontSpeedReport front_speed(const MomentumState& s, Prescription presc, double q,
                             const std::vector<double>& times, int sample_points) {
    if (!(q >= 1e-6 && q <= 0.5))
        throw PreconditionError("front_speed quantile must lie in [1e-6, 0.5]");
    if (times.empty())
        throw PreconditionError("front_speed needs at least one time");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0))
            throw PreconditionError("front_speed times must be positive (t = 0 is implicit)");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw PreconditionError("front_speed times must be strictly increasing");
    }

    FrontSpeedReport report;
    report.q = q;
    report.times.push_back(0.0);
    report.radii.push_back(cumulative_from_origin(s, presc, 0.0, sample_points).invert(1.0 - q));
    for (double t : times) {
        const double r = cumulative_from_origin(s, presc, t, sample_points).invert(1.0 - q);
        report.times.push_back(t);
        report.radii.push_back(r);
        report.speeds.push_back((r - report.radii.front()) / t);
    }
    return report;
}

std::vector<NarrowEnergyRow> narrow_energy_study(const std::vector<MomentumState>& family,
                                                 double t, int sample_points) {
    if (family.empty())
        throw PreconditionError("narrow_energy_study needs a nonempty family");
    std::vector<NarrowEnergyRow> rows;
    double prev_ratio = std::numeric_limits<double>::infinity();
    for (const auto& s : family) {
        const double ratio = energy_spread_ratio(s);
        if (!(ratio < prev_ratio))
            throw PreconditionError(
                "narrow_energy_study family must be sorted by decreasing Delta E / <E>");
        prev_ratio = ratio;

        const Interval da = auto_domain(s, Prescription::NaiveNormalized, t);
        const Interval db = auto_domain(s, Prescription::Povm, t);
        const Interval dom{std::min(da.lo, db.lo), std::max(da.hi, db.hi)};
        const int n = std::max(sample_points, 257);

        DensityEvaluator naive(s, Prescription::NaiveNormalized, t);
        DensityEvaluator povm(s, Prescription::Povm, t);
        std::vector<double> diff(n);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const double x = dom.lo + (dom.hi - dom.lo) * i / (n - 1.0);
            const double w = s.params().dim == 1 ? 1.0 : 4.0 * std::numbers::pi * x * x;
            diff[i] = w * std::abs(naive(x) - povm(x));
        }
        double l1 = 0.0;
        const double h = (dom.hi - dom.lo) / (n - 1.0);
        for (int i = 1; i < n; ++i)
            l1 += 0.5 * (diff[i] + diff[i - 1]) * h;
        rows.push_back({ratio, l1});
    }
    return rows;
}

std::vector<LocalizationRow> localization_bound_scan(const std::vector<MomentumState>& family,
                                                     double q, int sample_points) {
    if (!(q > 0.0 && q < 1.0))
        throw PreconditionError("localization scan mass fraction must lie in (0, 1)");
    std::vector<LocalizationRow> rows;
    for (const auto& s : family) {
        const auto cum = cumulative_from_origin(s, Prescription::Povm, 0.0, sample_points);
        const double r = cum.invert(q);
        LocalizationRow row;
        if (s.params().dim == 1) {
            row.width = 2.0 * r;
        } else {
            const double volume = 4.0 / 3.0 * std::numbers::pi * r * r * r;
            row.width = std::cbrt(volume);
        }
        row.mean_energy = energy_moment(s, 1);
        row.product = row.width * row.mean_energy;
        rows.push_back(row);
    }
    // the decade-span requirement applies to full scans; pairs and single
    // states (dilation and limit checks) are exempt
    if (rows.size() >= 3) {
        double wmin = rows.front().width, wmax = rows.front().width;
        for (const auto& row : rows) {
            wmin = std::min(wmin, row.width);
            wmax = std::max(wmax, row.width);
        }
        if (wmax < 10.0 * wmin)
            throw PreconditionError("localization scan family must span at least a "
                                    "decade of widths");
    }
    return rows;
}

double convexity_gap(const MixedState& mix, Prescription presc, double t,
                     int sample_points) {
    if (mix.components().size() < 2)
        throw PreconditionError("convexity_gap needs a mixture with >= 2 components");
    if (presc == Prescription::EnergyDensityRaw)
        throw PreconditionError("convexity_gap applies to probability prescriptions");

    // common domain covering every component
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& c : mix.components()) {
        const Interval d = auto_domain(c.state, presc, t);
        if (first) {
            lo = d.lo;
            hi = d.hi;
            first = false;
        } else {
            lo = std::min(lo, d.lo);
            hi = std::max(hi, d.hi);
        }
    }
    const int n = std::max(sample_points, 257);
    std::vector<double> points(n);
    for (int i = 0; i < n; ++i)
        points[i] = lo + (hi - lo) * i / (n - 1.0);

    const DensityProfile mixture = mixture_density(mix, points, t, presc);

    // convex combination of the component densities
    std::vector<double> convex(points.size(), 0.0);
    for (const auto& c : mix.components()) {
        const DensityProfile part = density_profile(c.state, presc, points, t);
        for (std::size_t i = 0; i < convex.size(); ++i)
            convex[i] += c.weight * part.values[i];
    }

    const int dim = mix.params().dim;
    double l1 = 0.0;
    for (int i = 1; i < n; ++i) {
        const double wa = dim == 1 ? 1.0 : 4.0 * std::numbers::pi * points[i - 1] * points[i - 1];
        const double wb = dim == 1 ? 1.0 : 4.0 * std::numbers::pi * points[i] * points[i];
        const double fa = wa * std::abs(mixture.values[i - 1] - convex[i - 1]);
        const double fb = wb * std::abs(mixture.values[i] - convex[i]);
        l1 += 0.5 * (fa + fb) * (points[i] - points[i - 1]);
    }
    return l1;
}

} // namespace locdens
