#include "magtf/pressure.hpp"

#include <cmath>
#include <limits>

#include "magtf/errors.hpp"

namespace magtf {

namespace {

void check_finite(double v, double bh) {
    if (!std::isfinite(v)) throw domain_error("pressure: non-finite energy argument");
    if (!std::isfinite(bh) || bh < 0.0) throw domain_error("pressure: bh must be finite and >= 0");
}

// Below this the Landau sum is replaced by its bh -> 0 limit; the series has
// O(bh^2) corrections, so the switch is seamless at double precision scales.
constexpr double kBhLimit = 1e-12;

// S_p(v, bh) = sum_{j>=0} (1 - delta_{j0}/2) (v - 2 j bh)_+^p for p = 1/2, 3/2.
// Direct summation for short sums; Euler-Maclaurin over the smooth middle with
// exact head/edge blocks otherwise (the edge power (.)^p is kept out of the
// smooth range).
template <double p>
double landau_powsum(double v, double bh) {
    if (v <= 0.0) return 0.0;
    const double twob = 2.0 * bh;
    const long jstar = static_cast<long>(v / twob);  // last contributing index
    auto f = [&](double j) { return std::pow(v - twob * j, p); };

    constexpr long kDirect = 512;
    if (jstar <= kDirect) {
        double s = 0.0;
        for (long j = jstar; j >= 1; --j) {
            const double t = v - twob * j;
            if (t > 0.0) s += std::pow(t, p);
        }
        return s + 0.5 * std::pow(v, p);
    }

    const long head = 8;
    const long tail = 64;
    const long a = head, b = jstar - tail;
    double s = 0.5 * std::pow(v, p);
    for (long j = 1; j < head; ++j) s += f(static_cast<double>(j));
    for (long j = b + 1; j <= jstar; ++j) {
        const double t = v - twob * j;
        if (t > 0.0) s += std::pow(t, p);
    }
    // Euler-Maclaurin on [a, b]: integral + trapezoid ends + B2, B4 corrections
    const double ta = v - twob * a, tb = v - twob * b;
    const double integral = (std::pow(ta, p + 1) - std::pow(tb, p + 1)) / (twob * (p + 1));
    const double fpa = -twob * p * std::pow(ta, p - 1);
    const double fpb = -twob * p * std::pow(tb, p - 1);
    const double c3 = -twob * twob * twob * p * (p - 1) * (p - 2);
    const double fpppa = c3 * std::pow(ta, p - 3);
    const double fpppb = c3 * std::pow(tb, p - 3);
    s += integral + 0.5 * (f(static_cast<double>(a)) + f(static_cast<double>(b))) +
         (fpb - fpa) / 12.0 - (fpppb - fpppa) / 720.0;
    return s;
}

}  // namespace

PressureParams::PressureParams(double bh_) : bh(bh_) {
    check_finite(0.0, bh);
}

double magnetic_pressure(double v, const PressureParams& p) {
    check_finite(v, p.bh);
    if (v <= 0.0) return 0.0;
    const double bh = p.bh;
    if (bh < kBhLimit) return PressureParams::kappa0 / 5.0 * std::pow(v, 2.5);
    return PressureParams::kappa0 * landau_powsum<1.5>(v, bh) * bh;
}

double pressure_density(double v, const PressureParams& p) {
    check_finite(v, p.bh);
    if (v <= 0.0) return 0.0;
    const double bh = p.bh;
    if (bh < kBhLimit) return PressureParams::kappa0 / 2.0 * std::pow(v, 1.5);
    return 1.5 * PressureParams::kappa0 * landau_powsum<0.5>(v, bh) * bh;
}

double pressure_field_derivative(double v, const PressureParams& p) {
    check_finite(v, p.bh);
    if (v <= 0.0) return 0.0;
    const double bh = p.bh;
    if (bh < kBhLimit) return 0.0;  // P converges to a bh-independent limit
    // sum_j w_j [ t^{3/2} - 3 j bh t^{1/2} ] with t = v - 2 j bh and
    // 3 j bh = (3/2)(v - t):  = (5/2) S_{3/2} - (3/2) v S_{1/2}
    return PressureParams::kappa0 *
           (2.5 * landau_powsum<1.5>(v, bh) - 1.5 * v * landau_powsum<0.5>(v, bh));
}

double pressure_curvature(double v, const PressureParams& p, double cap) {
    check_finite(v, p.bh);
    if (v <= 0.0) return 0.0;
    const double bh = p.bh;
    if (bh < kBhLimit) return std::min(cap, 0.75 * PressureParams::kappa0 * std::sqrt(v));
    const double q = v / (2.0 * bh);
    if (std::fabs(q - std::round(q)) * 2.0 * bh < 1e-300) return cap;
    return std::min(cap, 0.75 * PressureParams::kappa0 * landau_powsum<-0.5>(v, bh) * bh);
}

double magnetic_pressure_strong(double v, double bh) {
    check_finite(v, bh);
    if (v <= 0.0) return 0.0;
    return 0.5 * PressureParams::kappa0 * v * std::sqrt(v) * bh;
}

double pressure_density_strong(double v, double bh) {
    check_finite(v, bh);
    if (v <= 0.0) return 0.0;
    return 0.75 * PressureParams::kappa0 * std::sqrt(v) * bh;
}

double pressure_field_derivative_strong(double v, double bh) {
    check_finite(v, bh);
    if (v <= 0.0) return 0.0;
    return 0.5 * PressureParams::kappa0 * v * std::sqrt(v);
}

double expansion_error_constant() {
    // max over the published sweep grid of lhs / rhs(C=1), doubled; frozen.
    // Recomputed by tests/test_pressure.cpp (calibration sweep).
    return 6.42;
}

std::pair<double, double> expansion_error_check(double v, double bh, double Bh,
                                                const PressureParams& p) {
    if (!std::isfinite(v)) throw domain_error("expansion_error_check: non-finite v");
    if (!std::isfinite(bh) || bh < 0.0 || !std::isfinite(Bh) || Bh < 0.0)
        throw domain_error("expansion_error_check: bh, Bh must be finite and >= 0");
    PressureParams pb(bh);
    PressureParams pB(Bh);
    const double lhs = std::fabs(magnetic_pressure(v, pB) - magnetic_pressure(v, pb) -
                                 pressure_field_derivative(v, pb) * (Bh - bh));
    const double d = std::fabs(Bh - bh);
    const double C = expansion_error_constant();
    (void)p;
    const double rhs = C * (d * d + d * std::sqrt(d) * bh);
    return {lhs, rhs};
}

}  // namespace magtf
