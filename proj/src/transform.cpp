#include "locdens/transform.hpp"

#include <algorithm>
#include <cmath>

#include "locdens/errors.hpp"

namespace locdens {

double field_weight(FieldKind kind, double energy) {
    switch (kind) {
    case FieldKind::Plain:
        return 1.0;
    case FieldKind::Tilde:
        return 1.0 / std::sqrt(energy);
    case FieldKind::NewtonWigner:
        return std::sqrt(2.0 * energy);
    }
    throw PreconditionError("unknown field kind");
}

double sinc_kernel(double u) {
    const double a = std::abs(u);
    if (a < kSincSeriesThreshold) {
        // sin(u)/u = sum (-1)^k u^{2k} / (2k+1)!
        const double u2 = u * u;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= 8; ++k) {
            term *= -u2 / (2.0 * k * (2.0 * k + 1.0));
            sum += term;
        }
        return sum;
    }
    return std::sin(u) / u;
}

double sinc_kernel_derivative(double u) {
    const double a = std::abs(u);
    if (a < kSincSeriesThreshold) {
        // d/du [sin(u)/u] = sum_{k>=1} (-1)^k 2k u^{2k-1} / (2k+1)!
        const double u2 = u * u;
        double t = -u / 6.0; // (-1)^k u^{2k-1}/(2k+1)! at k=1
        double sum = 2.0 * t;
        for (int k = 2; k <= 8; ++k) {
            t *= -u2 / (2.0 * k * (2.0 * k + 1.0));
            sum += 2.0 * k * t;
        }
        return sum;
    }
    return (u * std::cos(u) - std::sin(u)) / (u * u);
}

namespace {

void require_weight_regular(const MomentumState& s, FieldKind kind) {
    if (kind == FieldKind::Plain || s.params().mass > 0.0)
        return;
    // E^{-1/2} and sqrt(2E) are fine at E -> 0 only if psi vanishes there
    const double at_zero = s.value_near_zero();
    const double peak = s.peak_value();
    if (s.grid().lo() <= 0.0 && at_zero >= 1e-6 * peak)
        throw SingularWeightError(
            "massless state with |psi(0)| = " + std::to_string(at_zero / peak) +
            " * max|psi| (need < 1e-6) cannot carry the " + to_string(kind) + " weight");
}

} // namespace

FieldEvaluator::FieldEvaluator(const MomentumState& s, FieldKind kind) {
    if (!s.normalized())
        throw PreconditionError("field evaluation requires a normalized state");
    require_weight_regular(s, kind);
    mass_ = s.params().mass;
    dim_ = s.params().dim;
    const auto& nodes = s.grid().nodes();
    p_ = nodes;
    energy_.resize(nodes.size());
    base_.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        energy_[i] = on_shell_energy(nodes[i], mass_);
        base_[i] = s.measure()[i] * field_weight(kind, energy_[i]) * s.values()[i];
    }
}

FieldEvaluator::TimeSlice FieldEvaluator::slice(double t) const {
    TimeSlice slice;
    slice.coeff_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i)
        slice.coeff_[i] = base_[i] * std::polar(1.0, -energy_[i] * t);
    slice.p_ = p_.data();
    slice.energy_ = energy_.data();
    slice.mass_ = mass_;
    slice.dim_ = dim_;
    return slice;
}

FieldSample FieldEvaluator::TimeSlice::at(double x) const {
    cplx val = 0.0, grad_acc = 0.0, dt_acc = 0.0;
    const std::size_t n = coeff_.size();
    if (dim_ == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            const cplx term = coeff_[i] * std::polar(1.0, p_[i] * x);
            val += term;
            grad_acc += p_[i] * term;
            dt_acc += energy_[i] * term;
        }
        // d/dx brings down ip, d/dt brings down -iE
        return {val, cplx(0.0, 1.0) * grad_acc, cplx(0.0, -1.0) * dt_acc};
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double u = p_[i] * x;
        const cplx kv = coeff_[i] * sinc_kernel(u);
        val += kv;
        grad_acc += coeff_[i] * p_[i] * sinc_kernel_derivative(u);
        dt_acc += energy_[i] * kv;
    }
    return {val, grad_acc, cplx(0.0, -1.0) * dt_acc};
}

double FieldEvaluator::TimeSlice::density_quadratic_form(double x) const {
    const FieldSample f = at(x);
    return std::norm(f.grad) + std::norm(f.dt) + mass_ * mass_ * std::norm(f.value);
}

FieldSample FieldEvaluator::at(double x, double t) const {
    return slice(t).at(x);
}

PositionField evaluate_field(const MomentumState& s, FieldKind kind,
                             const std::vector<double>& points, double t) {
    for (double x : points)
        if (!std::isfinite(x))
            throw PreconditionError("field evaluation points must be finite");
    FieldEvaluator eval(s, kind);
    const auto slice = eval.slice(t);
    PositionField field;
    field.points = points;
    field.t = t;
    field.kind = kind;
    field.dim = s.params().dim;
    const std::size_t n = points.size();
    field.value.resize(n);
    field.grad.resize(n);
    field.dt.resize(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const FieldSample f = slice.at(points[i]);
        field.value[i] = f.value;
        field.grad[i] = f.grad;
        field.dt[i] = f.dt;
    }
    return field;
}

DerivativeReport check_derivatives(const MomentumState& s, FieldKind kind, double x,
                                   double t, double h) {
    if (!(h >= 1e-6 && h <= 1e-2))
        throw PreconditionError("finite-difference step must lie in [1e-6, 1e-2]");
    FieldEvaluator eval(s, kind);
    const FieldSample f = eval.at(x, t);
    const cplx grad_fd =
        (eval.at(x + h, t).value - eval.at(x - h, t).value) / (2.0 * h);
    const cplx dt_fd = (eval.at(x, t + h).value - eval.at(x, t - h).value) / (2.0 * h);

    const double scale_g = std::max({std::abs(f.grad), std::abs(grad_fd), 1e-12});
    const double scale_t = std::max({std::abs(f.dt), std::abs(dt_fd), 1e-12});
    DerivativeReport report;
    report.grad_deviation = std::abs(f.grad - grad_fd) / scale_g;
    report.dt_deviation = std::abs(f.dt - dt_fd) / scale_t;
    report.max_deviation = std::max(report.grad_deviation, report.dt_deviation);
    report.step = h;
    return report;
}

} // namespace locdens
