#ifndef LOCDENS_TRANSFORM_HPP
#define LOCDENS_TRANSFORM_HPP

#include <vector>

#include "locdens/state.hpp"
#include "locdens/types.hpp"

namespace locdens {

/// Momentum weight w(p) of a field kind; see FieldKind.
double field_weight(FieldKind kind, double energy);

/// Position-space field samples at fixed time: value, spatial derivative
/// (dim=1: d/dx; dim=3: d/dr, with |grad psi| = |d psi/dr| by symmetry) and
/// time derivative. All three come from the same quadrature with the kernel
/// differentiated analytically under the integral.
struct PositionField {
    std::vector<double> points;
    double t = 0.0;
    std::vector<cplx> value;
    std::vector<cplx> grad;
    std::vector<cplx> dt;
    FieldKind kind = FieldKind::Plain;
    int dim = 1;
};

struct FieldSample {
    cplx value;
    cplx grad;
    cplx dt;
};

/// Caches the time-independent quadrature coefficients of one (state, kind)
/// pair so profiles and adaptive integrals can sample cheaply.
class FieldEvaluator {
  public:
    FieldEvaluator(const MomentumState& s, FieldKind kind);

    FieldSample at(double x, double t) const;
    /// Freezes the e^{-iEt} phase; sample with slice.at(x). Borrows the
    /// node/energy arrays of the evaluator it came from.
    class TimeSlice {
      public:
        FieldSample at(double x) const;
        double density_quadratic_form(double x) const; ///< |grad|^2+|dt|^2+m^2|value|^2

      private:
        friend class FieldEvaluator;
        std::vector<cplx> coeff_; // measure * weight * psi * phase
        const double* p_ = nullptr;
        const double* energy_ = nullptr;
        double mass_ = 0.0;
        int dim_ = 1;
    };
    TimeSlice slice(double t) const;

    double mass() const { return mass_; }
    int dim() const { return dim_; }

  private:
    std::vector<double> p_;
    std::vector<double> energy_;
    std::vector<cplx> base_; // measure * weight * psi
    double mass_ = 0.0;
    int dim_ = 1;
};

/// Evaluates the field of the given kind at the points and time.
PositionField evaluate_field(const MomentumState& s, FieldKind kind,
                             const std::vector<double>& points, double t);

/// Analytic derivatives vs central finite differences of evaluate_field.
struct DerivativeReport {
    double grad_deviation = 0.0; ///< max relative deviation of the spatial derivative
    double dt_deviation = 0.0;   ///< same for the time derivative
    double max_deviation = 0.0;
    double step = 0.0;
};

/// h must lie in [1e-6, 1e-2].
DerivativeReport check_derivatives(const MomentumState& s, FieldKind kind, double x,
                                   double t, double h);

/// sinc(u) = sin(u)/u and its derivative, series-protected near u = 0.
/// Exposed for the small-radius stability checks.
double sinc_kernel(double u);
double sinc_kernel_derivative(double u);
/// Below this |u| both functions switch to their series forms.
inline constexpr double kSincSeriesThreshold = 0.5;

} // namespace locdens

#endif
