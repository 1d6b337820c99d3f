// Prints the derived fixture values used throughout the test suites, each
// computed twice: once with the adaptive-Simpson oracle (where it applies)
// and once with the library at double resolution. Run by hand when a frozen
// constant needs re-deriving; not registered with ctest.

#include <cstdio>
#include <vector>

#include "locdens/analysis.hpp"
#include "locdens/density.hpp"
#include "support/oracle.hpp"

using namespace locdens;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * i / (n - 1.0);
    return xs;
}

void both(const char* name, double oracle_value, double lib_value) {
    std::printf("%-44s oracle = %.13g   library(2x) = %.13g   rel = %.2e\n", name,
                oracle_value, lib_value, std::abs(oracle_value - lib_value) /
                                             std::max(std::abs(lib_value), 1e-300));
}

} // namespace

int main() {
    const ModelParams massive{1.0, 1};
    GridSpec fine;
    fine.nodes = 4096;

    {
        const oracle::Gaussian1D ref(1.0, 0.0, 0.25);
        const auto s = MomentumState::gaussian(massive, 0.0, 0.25, fine);
        both("norm constant (m=1,p0=0,s=0.25)", ref.norm, s.gaussian_tag()->norm);
        both("<H> (m=1,p0=0,s=0.25)", ref.moment(1), energy_moment(s, 1));
    }
    {
        const oracle::Gaussian1D ref(1.0, 1.0, 0.25);
        const auto s = MomentumState::gaussian(massive, 1.0, 0.25, fine);
        both("norm constant (m=1,p0=1,s=0.25)", ref.norm, s.gaussian_tag()->norm);
        both("<H> (m=1,p0=1,s=0.25)", ref.moment(1), energy_moment(s, 1));
    }
    {
        const oracle::Gaussian1D ref(0.0, 2.0, 0.25);
        const auto s = MomentumState::gaussian(ModelParams{0.0, 1}, 2.0, 0.25, fine);
        both("norm constant (m=0,p0=2,s=0.25)", ref.norm, s.gaussian_tag()->norm);
    }
    {
        const oracle::Gaussian1D ref(1.0, 2.0, 0.25);
        const auto s = MomentumState::gaussian(massive, 2.0, 0.25, fine);
        both("<H> (m=1,p0=2,s=0.25)", ref.moment(1), energy_moment(s, 1));
    }
    {
        const auto a = MomentumState::gaussian(massive, 0.0, 0.25, fine);
        const auto b = MomentumState::gaussian(massive, 0.5, 0.25, fine);
        both("overlap (p0=0 | p0=0.5)",
             oracle::overlap(oracle::Gaussian1D(1.0, 0.0, 0.25),
                             oracle::Gaussian1D(1.0, 0.5, 0.25)),
             inner_product(a, b).real());
    }
    {
        const oracle::Gaussian1D ref(1.0, 0.0, 0.25);
        const auto s = MomentumState::gaussian(massive, 0.0, 0.25, fine);
        const auto field = evaluate_field(s, FieldKind::Plain, {0.0}, 0.0);
        both("plain field value at x=0,t=0", ref.field(0.0, 0.0, oracle::Weight::Plain).value.real(),
             field.value[0].real());
    }

    std::puts("\n-- library-only fixtures, base vs double resolution --");
    {
        const auto s1 = MomentumState::gaussian(massive, 0.0, 0.25);
        const auto s2 = MomentumState::gaussian(massive, 2.0, 0.25);
        const auto m = mix({{0.5, s1}, {0.5, s2}});
        const auto s1f = MomentumState::gaussian(massive, 0.0, 0.25, fine);
        const auto s2f = MomentumState::gaussian(massive, 2.0, 0.25, fine);
        const auto mf = mix({{0.5, s1f}, {0.5, s2f}});
        both("naive convexity L1 gap (ratio-2.2 pair)",
             convexity_gap(m, Prescription::NaiveNormalized, 0.0, 2001),
             convexity_gap(mf, Prescription::NaiveNormalized, 0.0, 4001));

        const Region window = Region::interval(-1.0, 1.0);
        auto region_gap = [&](const MixedState& mm, const MomentumState& a,
                              const MomentumState& b) {
            const double p_mix =
                region_probability(mm, window, 0.0, Prescription::NaiveNormalized);
            const double p_convex =
                0.5 * region_probability(a, window, 0.0, Prescription::NaiveNormalized) +
                0.5 * region_probability(b, window, 0.0, Prescription::NaiveNormalized);
            return p_mix - p_convex;
        };
        both("naive region gap [-1,1]", region_gap(m, s1, s2), region_gap(mf, s1f, s2f));
    }
    {
        std::puts("\n-- narrow-energy family (m=1, p0=5) --");
        for (double sigma : {1.0, 0.5, 0.25, 0.1}) {
            std::vector<MomentumState> base{MomentumState::gaussian(massive, 5.0, sigma)};
            std::vector<MomentumState> dbl{
                MomentumState::gaussian(massive, 5.0, sigma, fine)};
            char name[64];
            std::snprintf(name, sizeof(name), "L1(naive,povm) sigma=%g", sigma);
            both(name, narrow_energy_study(base, 0.0, 3001)[0].l1_distance,
                 narrow_energy_study(dbl, 0.0, 6001)[0].l1_distance);
        }
    }
    {
        std::puts("\n-- tail fits (t=0, window as shown) --");
        struct Row {
            double p0, sigma, lo, hi;
        };
        for (const Row row : {Row{0.0, 0.25, 4.0, 8.0}, Row{1.0, 0.25, 4.0, 8.0},
                              Row{0.0, 0.1, 8.0, 16.0}, Row{1.0, 0.1, 8.0, 16.0}}) {
            for (const auto presc :
                 {Prescription::Povm, Prescription::NaiveNormalized}) {
                const auto s = MomentumState::gaussian(massive, row.p0, row.sigma);
                const auto sf = MomentumState::gaussian(massive, row.p0, row.sigma, fine);
                const auto pts = linspace(row.lo, row.hi, 65);
                const auto ptsf = linspace(row.lo, row.hi, 129);
                const TailFit fit =
                    fit_tail(density_profile(s, presc, pts, 0.0), {row.lo, row.hi});
                const TailFit fitf =
                    fit_tail(density_profile(sf, presc, ptsf, 0.0), {row.lo, row.hi});
                char name[96];
                std::snprintf(name, sizeof(name), "gamma_hat p0=%g s=%g [%g,%g] %s",
                              row.p0, row.sigma, row.lo, row.hi,
                              to_string(presc).c_str());
                both(name, fit.gamma_hat, fitf.gamma_hat);
                std::printf("%-44s 3*stderr = %.3g (base), %.3g (2x)\n", "",
                            3.0 * fit.gamma_stderr, 3.0 * fitf.gamma_stderr);
            }
        }
    }
    {
        std::puts("\n-- front speeds (q=0.1, povm, m=1, p0=0, s=0.25) --");
        const auto s = MomentumState::gaussian(massive, 0.0, 0.25);
        const auto sf = MomentumState::gaussian(massive, 0.0, 0.25, fine);
        const auto base = front_speed(s, Prescription::Povm, 0.1, {1.0, 2.0, 4.0}, 4001);
        const auto dbl = front_speed(sf, Prescription::Povm, 0.1, {1.0, 2.0, 4.0}, 8001);
        both("R(0)", base.radii[0], dbl.radii[0]);
        for (int i = 0; i < 3; ++i) {
            char name[48];
            std::snprintf(name, sizeof(name), "speed t=%g", base.times[i + 1]);
            both(name, base.speeds[i], dbl.speeds[i]);
        }
    }
    {
        std::puts("\n-- localization scan (m=1, q=0.9) --");
        std::vector<MomentumState> family, familyf;
        GridSpec spec, specf;
        for (double sigma : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            spec.nodes = sigma >= 5.0 ? 8192 : 2048;
            specf.nodes = 2 * spec.nodes;
            family.push_back(MomentumState::gaussian(massive, 0.0, sigma, spec));
            familyf.push_back(MomentumState::gaussian(massive, 0.0, sigma, specf));
        }
        const auto rows = localization_bound_scan(family, 0.9, 4001);
        const auto rowsf = localization_bound_scan(familyf, 0.9, 8001);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            char name[48];
            std::snprintf(name, sizeof(name), "product #%zu", i);
            both(name, rows[i].product, rowsf[i].product);
        }
    }
    return 0;
}
