#include "magtf/radial.hpp"

#include <cmath>
#include <numbers>

#include "magtf/errors.hpp"

namespace magtf {

double RadialGrid::integrate(const std::vector<double>& f) const {
    if (f.size() != r.size()) throw domain_error("radial integrate: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
    return s;
}

RadialGrid make_radial_grid(double r_min, double r_switch, double r_max, int n_log, int n_uni) {
    if (!(0 < r_min && r_min < r_switch && r_switch < r_max))
        throw domain_error("make_radial_grid: need 0 < r_min < r_switch < r_max");
    if (n_log < 2 || n_uni < 2) throw domain_error("make_radial_grid: too few points");
    RadialGrid g;
    g.r.reserve(n_log + n_uni);
    const double lr0 = std::log(r_min), lr1 = std::log(r_switch);
    for (int i = 0; i < n_log; ++i) g.r.push_back(std::exp(lr0 + (lr1 - lr0) * i / (n_log - 1)));
    const double du = (r_max - r_switch) / n_uni;
    for (int i = 1; i <= n_uni; ++i) g.r.push_back(r_switch + du * i);

    // trapezoid weights with the 4 pi r^2 volume factor; the [0, r_min] stub
    // is closed with the leading-order r^2 piece
    const std::size_t n = g.r.size();
    g.w.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dr = g.r[i + 1] - g.r[i];
        g.w[i] += 0.5 * dr * 4.0 * std::numbers::pi * g.r[i] * g.r[i];
        g.w[i + 1] += 0.5 * dr * 4.0 * std::numbers::pi * g.r[i + 1] * g.r[i + 1];
    }
    g.w[0] += 4.0 * std::numbers::pi * g.r[0] * g.r[0] * g.r[0] / 3.0;
    return g;
}

std::vector<double> newton_potential(const std::vector<double>& rho, const RadialGrid& grid) {
    const std::size_t n = grid.size();
    if (rho.size() != n) throw domain_error("newton_potential: grid mismatch");
    // q_in(r) = int_{|y|<r} rho, outer(r) = int_{|y|>r} rho / |y|
    std::vector<double> qin(n), outer(n), phi(n);
    double acc = 4.0 * std::numbers::pi * grid.r[0] * grid.r[0] * grid.r[0] / 3.0 * rho[0];
    qin[0] = acc;
    for (std::size_t i = 1; i < n; ++i) {
        const double dr = grid.r[i] - grid.r[i - 1];
        acc += 0.5 * dr * 4.0 * std::numbers::pi *
               (grid.r[i - 1] * grid.r[i - 1] * rho[i - 1] + grid.r[i] * grid.r[i] * rho[i]);
        qin[i] = acc;
    }
    double tail = 0.0;
    outer[n - 1] = 0.0;
    for (std::size_t i = n - 1; i > 0; --i) {
        const double dr = grid.r[i] - grid.r[i - 1];
        tail += 0.5 * dr * 4.0 * std::numbers::pi *
                (grid.r[i - 1] * rho[i - 1] + grid.r[i] * rho[i]);
        outer[i - 1] = tail;
    }
    for (std::size_t i = 0; i < n; ++i) phi[i] = qin[i] / grid.r[i] + outer[i];
    return phi;
}

double coulomb_d(const std::vector<double>& f, const std::vector<double>& g,
                 const RadialGrid& grid) {
    if (f.size() != grid.size() || g.size() != grid.size())
        throw domain_error("coulomb_d: grid mismatch");
    std::vector<double> phi = newton_potential(g, grid);
    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) s += grid.w[i] * f[i] * phi[i];
    return 0.5 * s;
}

}  // namespace magtf
