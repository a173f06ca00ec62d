#pragma once

#include <numbers>
#include <utility>

namespace magtf {

/// Magnetic semiclassical pressure P_{bh}(v) and its derivatives.
///
/// P_{bh}(v) = kappa0 * sum_{j>=0} (1 - delta_{j0}/2) (v - 2j*bh)_+^{3/2} * bh,
/// with the bh -> 0 limit (kappa0/5) v_+^{5/2}. kappa0 is fixed so that the
/// field-free limit matches the spin-1/2 Weyl pressure of |xi|^2 - V in 3-D.
struct PressureParams {
    double bh = 0.0;  // dimensionless field * Planck product, >= 0

    // Normalization constant; the same for every instance. Kept as a field so
    // an alternate convention is a one-line change.
    static constexpr double kappa0 = 2.0 / (3.0 * std::numbers::pi * std::numbers::pi);

    explicit PressureParams(double bh_ = 0.0);
};

// P_{bh}(v); 0 for v <= 0. Finite sum: only j with 2j*bh < v contribute.
double magnetic_pressure(double v, const PressureParams& p);

// d/dv P_{bh}(v) = kappa0 * (3/2) * sum_j w_j (v - 2j*bh)_+^{1/2} * bh.
// This is the semiclassical density rho = P'_B(W + lambda).
double pressure_density(double v, const PressureParams& p);

// d/d(bh) P_{bh}(v) = kappa0 * sum_j w_j [ (v-2j*bh)_+^{3/2} - 3j*bh (v-2j*bh)_+^{1/2} ].
// One-sided (right limit) at the Landau thresholds v = 2j*bh.
double pressure_field_derivative(double v, const PressureParams& p);

// d^2/dv^2 P_{bh}(v), clamped to `cap`; blows up at the Landau thresholds.
double pressure_curvature(double v, const PressureParams& p, double cap);

// Strong-field truncation (only the j = 0 Landau level): P = kappa0/2 v_+^{3/2} bh.
double magnetic_pressure_strong(double v, double bh);
double pressure_density_strong(double v, double bh);
double pressure_field_derivative_strong(double v, double bh);  // = kappa0/2 v_+^{3/2}

/// Two-term expansion error: returns (lhs, rhs) of
///   |P_{Bh}(v) - P_{bh}(v) - d_{bh}P_{bh}(v) (Bh - bh)|
///     <= C (Bh-bh)^2 + C |Bh-bh|^{3/2} bh,
/// where C is the calibrated regression constant below.
std::pair<double, double> expansion_error_check(double v, double bh, double Bh,
                                                const PressureParams& p);

// Calibrated over the published sweep grid in the test suite (max ratio, doubled).
double expansion_error_constant();

}  // namespace magtf
