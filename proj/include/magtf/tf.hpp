#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "magtf/radial.hpp"

namespace magtf {

/// Single-nucleus magnetic Thomas-Fermi problem, solved radially in the units
/// of the operator (hD - A)^2 - V with h = 1, so rho = P'_B(W + lambda) with
/// the pressure evaluated at bh = B.
struct TFInputs {
    double Z = 1.0;
    double N = 1.0;
    double B = 0.0;
    double r_max = 0.0;  // 0: choose automatically (>= 4 rbar when N < Z)
    int n_grid = 3000;
};

struct TFSolution {
    std::vector<double> r;
    std::vector<double> W;    // screened potential
    std::vector<double> rho;  // density, rho = P'_B(W + lambda)
    double lambda = 0.0;      // chemical potential, <= 0
    double energy_primal = 0.0;
    double energy_dual = 0.0;
    double dual_gap = 0.0;
    double charge = 0.0;       // int rho
    double residual = 0.0;     // final self-consistency residual
    int iterations = 0;
    RadialGrid grid;
};

// rbar = min(B^{-1/4}, (Z-N)_+^{-1/3}); +inf when both branches degenerate.
double boundary_radius(double Z, double N, double B);

TFSolution solve_tf_atom(const TFInputs& inp);

double chemical_potential(const TFInputs& inp);

struct TFEnergy {
    double primal = 0.0;
    double dual = 0.0;
    double gap = 0.0;
};

// Density-form and pressure-form energies of a solution (recomputed from the
// stored profiles; solve_tf_atom already fills them in).
TFEnergy tf_energy(const TFSolution& sol, const TFInputs& inp);

// Legendre transform of the pressure: tau_B(rho) = sup_{w>=0} (rho w - P_B(w)).
double kinetic_density(double rho, double B);

// columnar text format: header record then (r, W, rho) rows
void write_tf_solution(const TFSolution& sol, const TFInputs& inp, std::ostream& os);

}  // namespace magtf
