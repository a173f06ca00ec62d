#pragma once

#include <array>
#include <utility>
#include <vector>

#include "magtf/field3d.hpp"

namespace magtf {

/// Self-generated field correction on a box grid: sources of the minimizer
/// equations, the vector Poisson solve, and the cross/penalty energy split.
struct MinimizerProblem {
    Field3D V;    // scalar potential samples
    Field3D psi;  // cutoff, 0 <= psi <= 1, zero on the two outermost layers
    double beta = 0.0;
    double h = 0.1;
    double kappa = 0.0;

    // moderate regime (beta h <= 1) uses the full Landau-sum pressure,
    // strong (beta h > 1) the j = 0 truncation
    bool strong_regime() const { return beta * h > 1.0; }
};

// Right-hand sides of Delta a_1 = s1, Delta a_2 = s2 (a_3 = 0): curl-type
// derivatives of d_beta P_{beta h}(V) psi; centered differences.
std::pair<Field3D, Field3D> minimizer_source(const MinimizerProblem& prob);

struct CorrectedEnergy {
    double main = 0.0;     // -h^{-3} int P_{beta h}(V) psi
    double cross = 0.0;    // field-coupling term
    double penalty = 0.0;  // (kappa h^2)^{-1} int |grad a|^2
    double total = 0.0;
};

CorrectedEnergy corrected_energy(const MinimizerProblem& prob, const Field3D& a_field);

// Solve the minimizer equations; returns the 3-vector field (third component 0).
Field3D solve_minimizer(const MinimizerProblem& prob);

struct CorrectionResult {
    double value = 0.0;  // cross + penalty at the minimizer, <= 0
    CorrectedEnergy energy;
    double grad_l2 = 0.0;  // ||grad a||_2 of the minimizer
};

// Minimum of the cross + penalty functional; the correction term.
CorrectionResult correction_term(const MinimizerProblem& prob);

struct FieldNorms {
    double l2_grad = 0.0;   // ||grad a||_{L^2}
    double sup_grad = 0.0;  // mu = ||grad a||_inf (pointwise Frobenius)
    double sup_hess = 0.0;  // ||grad^2 a||_inf
};

FieldNorms field_norms(const Field3D& a_field);

struct SweepFit {
    double slope = 0.0;      // log-log least squares slope
    std::vector<double> xs;  // swept parameter values
    std::vector<double> ys;  // |correction| (or norm) per value
};

// log-log slope of |correction| vs kappa at fixed (V, psi, beta, h)
SweepFit correction_kappa_sweep(const MinimizerProblem& base, const std::vector<double>& kappas);
// log-log slope of |correction| vs beta (d_beta P recomputed per beta)
SweepFit correction_beta_sweep(const MinimizerProblem& base, const std::vector<double>& betas);
// log-log slope of ||grad a|| vs kappa
SweepFit gradnorm_kappa_sweep(const MinimizerProblem& base, const std::vector<double>& kappas);

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace magtf
