#ifndef LOCDENS_TESTS_ORACLE_HPP
#define LOCDENS_TESTS_ORACLE_HPP

// Test-only oracle: closed-form Gaussian states integrated with recursive
// adaptive Simpson. Shares no quadrature code with the library (which uses
// composite Gauss-Legendre panels), so agreement is a genuine cross-check.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracle {

using cplx = std::complex<double>;

inline double simpson(const std::function<double(double)>& f, double a, double m,
                      double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double m,
                            double b, double fa, double fm, double fb, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, lm, m, fa, flm, fm);
    const double right = simpson(f, m, rm, b, fm, frm, fb);
    if (depth <= 0)
        return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson with absolute tolerance.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int depth = 42) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_step(f, a, m, b, fa, fm, fb, simpson(f, a, m, b, fa, fm, fb), tol,
                         depth);
}

enum class Weight { Plain, Tilde, NewtonWigner };

/// Closed-form normalized Gaussian state, dim = 1.
struct Gaussian1D {
    double mass, p0, sigma;
    double lo, hi;
    double norm = 1.0;

    Gaussian1D(double mass_, double p0_, double sigma_)
        : mass(mass_), p0(p0_), sigma(sigma_), lo(p0_ - 14.0 * sigma_),
          hi(p0_ + 14.0 * sigma_) {
        const double n2 = measure_integral([this](double p) {
            const double u = unnormalized(p);
            return u * u;
        });
        norm = 1.0 / std::sqrt(n2);
    }

    double unnormalized(double p) const {
        const double d = (p - p0) / (2.0 * sigma);
        return std::exp(-d * d);
    }
    double psi(double p) const { return norm * unnormalized(p); }
    double energy(double p) const { return std::hypot(p, mass); }

    /// integral dmu(p) g(p); massless states exclude a +-1e-12 zone around
    /// p = 0 (the packet suppresses the 1/|p| singularity to below 1e-12
    /// there).
    double measure_integral(const std::function<double(double)>& g) const {
        auto f = [&](double p) {
            return g(p) / (2.0 * std::numbers::pi * 2.0 * energy(p));
        };
        if (mass == 0.0 && lo < 0.0) {
            const double cut = 1e-12;
            return integrate(f, lo, -cut) + integrate(f, cut, hi);
        }
        return integrate(f, lo, hi);
    }

    double moment(int k) const {
        return measure_integral([&](double p) {
            return psi(p) * psi(p) * std::pow(energy(p), k);
        });
    }

    double weight(Weight w, double p) const {
        switch (w) {
        case Weight::Plain:
            return 1.0;
        case Weight::Tilde:
            return 1.0 / std::sqrt(energy(p));
        case Weight::NewtonWigner:
            return std::sqrt(2.0 * energy(p));
        }
        return 0.0;
    }

    /// (value, d/dx, d/dt) of the weighted transform at (x, t).
    struct Field {
        cplx value, grad, dt;
    };
    Field field(double x, double t, Weight w, double tol = 1e-13) const {
        auto part = [&](const std::function<double(double)>& mult, bool imag_part) {
            return measure_integral([&](double p) {
                const double phase = p * x - energy(p) * t;
                return weight(w, p) * psi(p) * mult(p) *
                       (imag_part ? std::sin(phase) : std::cos(phase));
            });
        };
        (void)tol;
        auto one = [](double) { return 1.0; };
        auto mom = [](double p) { return p; };
        auto erg = [&](double p) { return energy(p); };
        Field f;
        f.value = cplx(part(one, false), part(one, true));
        f.grad = cplx(0.0, 1.0) * cplx(part(mom, false), part(mom, true));
        f.dt = cplx(0.0, -1.0) * cplx(part(erg, false), part(erg, true));
        return f;
    }

    double density(double x, double t, Weight w) const {
        const Field f = field(x, t, w);
        if (w == Weight::NewtonWigner)
            return std::norm(f.value);
        return std::norm(f.grad) + std::norm(f.dt) + mass * mass * std::norm(f.value);
    }
};

/// Overlap of two Gaussians over the invariant measure.
inline double overlap(const Gaussian1D& a, const Gaussian1D& b) {
    if (a.mass != b.mass)
        throw std::invalid_argument("oracle overlap: mass mismatch");
    const double lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
    return integrate(
        [&](double p) {
            return a.psi(p) * b.psi(p) /
                   (2.0 * std::numbers::pi * 2.0 * a.energy(p));
        },
        lo, hi);
}

} // namespace oracle

#endif
