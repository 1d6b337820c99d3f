#ifndef LOCDENS_TYPES_HPP
#define LOCDENS_TYPES_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "locdens/errors.hpp"

namespace locdens {

using cplx = std::complex<double>;

/// Model parameters in natural units (hbar = c = 1).
/// dim = 1: signed momenta on the line. dim = 3: radially symmetric
/// wavefunctions psi(p) = psi(|p|).
struct ModelParams {
    double mass = 1.0;
    int dim = 1;

    void validate() const {
        if (!(mass >= 0.0))
            throw ConfigError("model.mass must be >= 0, got " + std::to_string(mass));
        if (dim != 1 && dim != 3)
            throw ConfigError("model.dim must be 1 or 3, got " + std::to_string(dim));
    }
    bool operator==(const ModelParams&) const = default;
};

/// On-shell energy E(p) = sqrt(m^2 + p^2).
inline double on_shell_energy(double p, double mass) {
    return std::hypot(p, mass);
}

/// Which momentum weight multiplies psi(p) before the position-space
/// transform:
///   Plain        -> 1            (the configuration-space wavefunction)
///   Tilde        -> E(p)^(-1/2)  (the POVM amplitude)
///   NewtonWigner -> sqrt(2 E(p)) (L2-normalized position amplitude)
enum class FieldKind { Plain, Tilde, NewtonWigner };

enum class Prescription { EnergyDensityRaw, NaiveNormalized, Povm, NewtonWigner };

std::string to_string(FieldKind kind);
std::string to_string(Prescription p);
Prescription prescription_from_string(const std::string& name);

/// Closed interval on the spatial axis (dim=1) or on the radius (dim=3).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Finite union of disjoint intervals (dim=1) or radial shells (dim=3).
struct Region {
    std::vector<Interval> parts;

    /// Sorts the parts and checks disjointness / positive measure.
    /// dim=3 shells must have lo >= 0.
    void validate(int dim) const;
    static Region interval(double lo, double hi) { return Region{{{lo, hi}}}; }
};

} // namespace locdens

#endif
