#include "magtf/fieldmin.hpp"

#include <cmath>

#include "magtf/errors.hpp"
#include "magtf/poisson.hpp"
#include "magtf/pressure.hpp"

namespace magtf {

namespace {

void validate(const MinimizerProblem& prob) {
    if (!prob.V.same_grid(prob.psi)) throw domain_error("fieldmin: V/psi grid mismatch");
    if (prob.h <= 0 || prob.beta < 0 || prob.kappa < 0)
        throw domain_error("fieldmin: need h > 0, beta >= 0, kappa >= 0");
    const auto& d = prob.psi.dims;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int k = 0; k < d[2]; ++k) {
                double p = prob.psi.at(i, j, k);
                if (p < -1e-12 || p > 1.0 + 1e-12)
                    throw domain_error("fieldmin: psi out of [0,1]");
                bool edge = i < 2 || j < 2 || k < 2 || i >= d[0] - 2 || j >= d[1] - 2 ||
                            k >= d[2] - 2;
                if (edge && p != 0.0)
                    throw domain_error("fieldmin: psi must vanish on the two outermost layers");
            }
}

// d_beta P_{beta h}(v) = h * d_{bh} P at bh = beta*h; strong regime keeps j=0 only
double dbeta_pressure(double v, double beta, double h, bool strong) {
    const double bh = beta * h;
    if (strong) return h * pressure_field_derivative_strong(v, bh);
    return h * pressure_field_derivative(v, PressureParams(bh));
}

double pressure_val(double v, double beta, double h, bool strong) {
    const double bh = beta * h;
    if (strong) return magnetic_pressure_strong(v, bh);
    return magnetic_pressure(v, PressureParams(bh));
}

// F = d_beta P_{beta h}(V) psi on the grid
Field3D coupling_density(const MinimizerProblem& prob) {
    const bool strong = prob.strong_regime();
    Field3D F(prob.V.origin, prob.V.spacing, prob.V.dims, 1);
    const auto& d = prob.V.dims;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int k = 0; k < d[2]; ++k) {
                double p = prob.psi.at(i, j, k);
                if (p == 0.0) continue;
                F.at(i, j, k) = dbeta_pressure(prob.V.at(i, j, k), prob.beta, prob.h, strong) * p;
            }
    return F;
}

}  // namespace

std::pair<Field3D, Field3D> minimizer_source(const MinimizerProblem& prob) {
    validate(prob);
    Field3D F = coupling_density(prob);
    const auto& d = F.dims;
    Field3D s1(F.origin, F.spacing, F.dims, 1), s2(F.origin, F.spacing, F.dims, 1);
    const double c = 0.5 * prob.kappa / prob.h;
    for (int i = 1; i < d[0] - 1; ++i)
        for (int j = 1; j < d[1] - 1; ++j)
            for (int k = 1; k < d[2] - 1; ++k) {
                s1.at(i, j, k) = -c * centered_diff(F, i, j, k, 1);
                s2.at(i, j, k) = c * centered_diff(F, i, j, k, 0);
            }
    return {std::move(s1), std::move(s2)};
}

Field3D solve_minimizer(const MinimizerProblem& prob) {
    auto [s1, s2] = minimizer_source(prob);
    Field3D a1 = solve_vector_poisson(s1);
    Field3D a2 = solve_vector_poisson(s2);
    Field3D a(prob.V.origin, prob.V.spacing, prob.V.dims, 3);
    const std::size_t n = a.npoints();
    for (std::size_t p = 0; p < n; ++p) {
        a.values[3 * p + 0] = a1.values[p];
        a.values[3 * p + 1] = a2.values[p];
        a.values[3 * p + 2] = 0.0;
    }
    return a;
}

CorrectedEnergy corrected_energy(const MinimizerProblem& prob, const Field3D& a_field) {
    validate(prob);
    if (!a_field.same_grid(prob.V) || a_field.ncomp != 3)
        throw domain_error("corrected_energy: a_field grid mismatch");
    const bool strong = prob.strong_regime();
    const auto& d = prob.V.dims;
    const double dV = prob.V.cell_volume();
    const double h3 = prob.h * prob.h * prob.h;

    CorrectedEnergy out;
    // main term
    double m = 0.0;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int k = 0; k < d[2]; ++k) {
                double p = prob.psi.at(i, j, k);
                if (p == 0.0) continue;
                m += pressure_val(prob.V.at(i, j, k), prob.beta, prob.h, strong) * p;
            }
    out.main = -m * dV / h3;

    // cross term: -h^{-3} int [ d2(F) a1 - d1(F) a2 ]
    Field3D F = coupling_density(prob);
    double cr = 0.0;
    for (int i = 1; i < d[0] - 1; ++i)
        for (int j = 1; j < d[1] - 1; ++j)
            for (int k = 1; k < d[2] - 1; ++k)
                cr += centered_diff(F, i, j, k, 1) * a_field.at(i, j, k, 0) -
                      centered_diff(F, i, j, k, 0) * a_field.at(i, j, k, 1);
    out.cross = -cr * dV / h3;

    // penalty: face-difference Dirichlet energy (summation-by-parts partner of
    // the 7-point Laplacian used by the solver)
    double pen = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int ax = 0; ax < 3; ++ax) {
            int di = ax == 0, dj = ax == 1, dk = ax == 2;
            double inv = 1.0 / prob.V.spacing[ax];
            for (int i = 0; i < d[0] - di; ++i)
                for (int j = 0; j < d[1] - dj; ++j)
                    for (int k = 0; k < d[2] - dk; ++k) {
                        double g = (a_field.at(i + di, j + dj, k + dk, c) -
                                    a_field.at(i, j, k, c)) *
                                   inv;
                        pen += g * g;
                    }
        }
    if (prob.kappa > 0)
        out.penalty = pen * dV / (prob.kappa * prob.h * prob.h);
    else
        out.penalty = 0.0;
    out.total = out.main + out.cross + out.penalty;
    return out;
}

CorrectionResult correction_term(const MinimizerProblem& prob) {
    CorrectionResult res;
    Field3D a = solve_minimizer(prob);
    res.energy = corrected_energy(prob, a);
    res.value = res.energy.cross + res.energy.penalty;
    res.grad_l2 = field_norms(a).l2_grad;
    return res;
}

FieldNorms field_norms(const Field3D& a) {
    const auto& d = a.dims;
    if (d[0] < 3 || d[1] < 3 || d[2] < 3) throw domain_error("field_norms: grid too small");
    FieldNorms out;
    double l2 = 0.0;
    for (int i = 1; i < d[0] - 1; ++i)
        for (int j = 1; j < d[1] - 1; ++j)
            for (int k = 1; k < d[2] - 1; ++k) {
                double g2 = 0.0, h2 = 0.0;
                for (int c = 0; c < a.ncomp; ++c) {
                    double gx = centered_diff(a, i, j, k, 0, c);
                    double gy = centered_diff(a, i, j, k, 1, c);
                    double gz = centered_diff(a, i, j, k, 2, c);
                    g2 += gx * gx + gy * gy + gz * gz;
                    // second differences, including mixed
                    for (int ax = 0; ax < 3; ++ax) {
                        int di = ax == 0, dj = ax == 1, dk = ax == 2;
                        double s = (a.at(i + di, j + dj, k + dk, c) - 2 * a.at(i, j, k, c) +
                                    a.at(i - di, j - dj, k - dk, c)) /
                                   (a.spacing[ax] * a.spacing[ax]);
                        h2 += s * s;
                    }
                    for (int ax = 0; ax < 3; ++ax)
                        for (int bx = ax + 1; bx < 3; ++bx) {
                            int di1 = ax == 0, dj1 = ax == 1, dk1 = ax == 2;
                            int di2 = bx == 0, dj2 = bx == 1, dk2 = bx == 2;
                            double s = (a.at(i + di1 + di2, j + dj1 + dj2, k + dk1 + dk2, c) -
                                        a.at(i + di1 - di2, j + dj1 - dj2, k + dk1 - dk2, c) -
                                        a.at(i - di1 + di2, j - dj1 + dj2, k - dk1 + dk2, c) +
                                        a.at(i - di1 - di2, j - dj1 - dj2, k - dk1 - dk2, c)) /
                                       (4.0 * a.spacing[ax] * a.spacing[bx]);
                            h2 += 2.0 * s * s;
                        }
                }
                l2 += g2;
                out.sup_grad = std::max(out.sup_grad, std::sqrt(g2));
                out.sup_hess = std::max(out.sup_hess, std::sqrt(h2));
            }
    out.l2_grad = std::sqrt(l2 * a.cell_volume());
    return out;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw domain_error("loglog_slope: need >= 2 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0 || ys[i] <= 0) throw domain_error("loglog_slope: need positive data");
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {
SweepFit run_sweep(const MinimizerProblem& base, const std::vector<double>& vals, int which) {
    SweepFit fit;
    for (double v : vals) {
        MinimizerProblem p = base;
        if (which == 0 || which == 2)
            p.kappa = v;
        else
            p.beta = v;
        CorrectionResult r = correction_term(p);
        fit.xs.push_back(v);
        fit.ys.push_back(which == 2 ? r.grad_l2 : std::fabs(r.value));
    }
    fit.slope = loglog_slope(fit.xs, fit.ys);
    return fit;
}
}  // namespace

SweepFit correction_kappa_sweep(const MinimizerProblem& base, const std::vector<double>& kappas) {
    return run_sweep(base, kappas, 0);
}
SweepFit correction_beta_sweep(const MinimizerProblem& base, const std::vector<double>& betas) {
    return run_sweep(base, betas, 1);
}
SweepFit gradnorm_kappa_sweep(const MinimizerProblem& base, const std::vector<double>& kappas) {
    return run_sweep(base, kappas, 2);
}

}  // namespace magtf
