#pragma once

#include <vector>

namespace magtf {

/// Radial grid: logarithmic near r = 0 (Coulomb singularity), uniform tail.
/// Quadrature weights carry the 4 pi r^2 volume factor (trapezoid rule).
struct RadialGrid {
    std::vector<double> r;
    std::vector<double> w;  // weights including 4 pi r^2

    std::size_t size() const { return r.size(); }
    double integrate(const std::vector<double>& f) const;
};

RadialGrid make_radial_grid(double r_min, double r_switch, double r_max, int n_log, int n_uni);

// D(f,g) = 1/2 int int f(x) |x-y|^{-1} g(y) dx dy for spherically symmetric
// f, g via Newton's theorem. Carries the 1/2 prefactor.
double coulomb_d(const std::vector<double>& f, const std::vector<double>& g,
                 const RadialGrid& grid);

// phi(r) = int |x-y|^{-1} rho(y) dy (Newton: inner/outer charge integrals)
std::vector<double> newton_potential(const std::vector<double>& rho, const RadialGrid& grid);

}  // namespace magtf
