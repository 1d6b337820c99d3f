#ifndef LOCDENS_SELFTEST_HPP
#define LOCDENS_SELFTEST_HPP

#include <string>
#include <vector>

namespace locdens {

struct SelftestCheck {
    std::string name;
    double measured = 0.0;  ///< measured error
    double tolerance = 0.0; ///< tolerated error
    bool pass = false;
};

struct SelftestOptions {
    /// Fault-injection knob for the test harness: scales the invariant
    /// measure inside the normalization checks. Anything but 1.0 must make
    /// them fail.
    double measure_scale = 1.0;
    int resolution_scale = 1;
};

/// Runs the built-in invariant suite on fixed Gaussian fixtures:
/// normalization, mixture linearity, the tilde/Newton-Wigner weight
/// identity, derivative checks, density normalizations, time covariance.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {});

} // namespace locdens

#endif
