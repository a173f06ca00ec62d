#include "magtf/tf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "magtf/errors.hpp"
#include "magtf/pressure.hpp"

namespace magtf {

namespace {

void validate(const TFInputs& inp) {
    if (!(inp.Z > 0) || !(inp.N > 0) || inp.B < 0)
        throw domain_error("tf: need Z > 0, N > 0, B >= 0");
    if (inp.N > inp.Z * (1 + 1e-12))
        throw domain_error("tf: N > Z unsupported (theory assumes N <= Z)");
    if (inp.n_grid < 200) throw domain_error("tf: n_grid too small");
}

RadialGrid build_grid(const TFInputs& inp) {
    const double s = std::pow(inp.Z, -1.0 / 3.0);  // Thomas-Fermi length scale
    double r_max = inp.r_max;
    if (r_max <= 0) {
        r_max = 120.0 * s;
        const double rbar = boundary_radius(inp.Z, inp.N, inp.B);
        if (std::isfinite(rbar)) r_max = std::max(r_max, 4.0 * rbar);
    } else {
        const double rbar = boundary_radius(inp.Z, inp.N, inp.B);
        if (inp.N < inp.Z && std::isfinite(rbar) && r_max < 4.0 * rbar)
            throw domain_error("tf: r_max below 4 * boundary radius");
    }
    const int n_log = inp.n_grid / 2;
    const int n_uni = inp.n_grid - n_log;
    return make_radial_grid(1e-8 * s, s, r_max, n_log, n_uni);
}

struct FixedPointResult {
    std::vector<double> rho, W;
    double charge = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Inner solver at fixed lambda: damped Newton on the tridiagonal system for
// u_i = r_i W_i that is exactly equivalent to the trapezoid Newton-potential
// fixed point (the identity
//   (u_{i+1}-u_i)/h_i - (u_i-u_{i-1})/h_{i-1} = 2 pi r_i (h_{i-1}+h_i) rho_i
// holds exactly for the discrete quadrature). The Landau edge rho ~ sqrt(W+l)
// is treated implicitly, which plain damped Picard cannot do (limit cycle).
FixedPointResult solve_at_lambda(const TFInputs& inp, const RadialGrid& g, double lambda,
                                 const std::vector<double>* warm_u,
                                 std::vector<double>* u_out) {
    const std::size_t n = g.size();
    const PressureParams pp(inp.B);
    std::vector<double> u(n), rho(n), F(n), du(n);
    std::vector<double> dl(n), dd(n), dup(n);  // tridiagonal bands
    if (warm_u && warm_u->size() == n)
        u = *warm_u;
    else
        for (std::size_t i = 0; i < n; ++i)
            u[i] = inp.Z / (1.0 + std::pow(g.r[i] * std::pow(inp.Z, 1.0 / 3.0), 1.5));

    // outer potential constant at r_min, lagged between Newton steps
    double out0 = 0.0;

    auto rho_of = [&](double ui, double ri) { return pressure_density(ui / ri + lambda, pp); };

    // row-scaled residual norm (the raw rows carry 1/h scales)
    auto residual_norm = [&](const std::vector<double>& uu) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double f, sc;
            if (i == 0) {
                f = uu[0] - inp.Z + g.r[0] * out0;
                sc = std::max(1.0, std::fabs(inp.Z));
            } else if (i + 1 < n) {
                const double hm = g.r[i] - g.r[i - 1], hp = g.r[i + 1] - g.r[i];
                const double w = 2.0 * std::numbers::pi * g.r[i] * (hm + hp);
                const double rr = rho_of(uu[i], g.r[i]);
                f = (uu[i + 1] - uu[i]) / hp - (uu[i] - uu[i - 1]) / hm - w * rr;
                sc = (std::fabs(uu[i + 1]) + std::fabs(uu[i])) / hp +
                     (std::fabs(uu[i]) + std::fabs(uu[i - 1])) / hm + w * rr + 1e-30;
            } else {
                const double hm = g.r[i] - g.r[i - 1];
                const double w = 2.0 * std::numbers::pi * hm * g.r[i];
                const double rr = rho_of(uu[i], g.r[i]);
                f = (uu[i] - uu[i - 1]) / hm + w * rr;
                sc = (std::fabs(uu[i]) + std::fabs(uu[i - 1])) / hm + w * rr + 1e-30;
            }
            s = std::max(s, std::fabs(f) / sc);
        }
        return s;
    };

    FixedPointResult out;
    const int max_newton = 200;
    // the F rows carry 1/h scales, so sup|F| has a roundoff floor; run Newton
    // until it stalls and judge convergence by the integral-form defect below
    double fnorm = residual_norm(u);
    for (int it = 0; it < max_newton; ++it) {
        out.iterations = it + 1;
        if (fnorm < 1e-12) break;
        // assemble F and the tridiagonal Jacobian dF/du
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0) {
                F[0] = u[0] - inp.Z + g.r[0] * out0;
                dd[0] = 1.0;
                dup[0] = 0.0;
            } else if (i + 1 < n) {
                const double hm = g.r[i] - g.r[i - 1], hp = g.r[i + 1] - g.r[i];
                const double w = 2.0 * std::numbers::pi * g.r[i] * (hm + hp);
                F[i] = (u[i + 1] - u[i]) / hp - (u[i] - u[i - 1]) / hm -
                       w * rho_of(u[i], g.r[i]);
                dl[i] = 1.0 / hm;
                dd[i] = -1.0 / hp - 1.0 / hm -
                        w * pressure_curvature(u[i] / g.r[i] + lambda, pp, 1e12) / g.r[i];
                dup[i] = 1.0 / hp;
            } else {
                const double hm = g.r[i] - g.r[i - 1];
                const double w = 2.0 * std::numbers::pi * hm * g.r[i];
                F[i] = (u[i] - u[i - 1]) / hm + w * rho_of(u[i], g.r[i]);
                dl[i] = -1.0 / hm;
                dd[i] = 1.0 / hm + w * pressure_curvature(u[i] / g.r[i] + lambda, pp, 1e12) / g.r[i];
            }
        }
        // Thomas solve J du = -F
        {
            std::vector<double> c(n), d(n);
            c[0] = dup[0] / dd[0];
            d[0] = -F[0] / dd[0];
            for (std::size_t i = 1; i < n; ++i) {
                const double m = dd[i] - dl[i] * c[i - 1];
                c[i] = (i + 1 < n) ? dup[i] / m : 0.0;
                d[i] = (-F[i] - dl[i] * d[i - 1]) / m;
            }
            du[n - 1] = d[n - 1];
            for (std::size_t i = n - 1; i > 0; --i) du[i - 1] = d[i - 1] - c[i - 1] * du[i];
        }
        // line search
        double step = 1.0;
        std::vector<double> trial(n);
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + step * du[i];
            const double fn = residual_norm(trial);
            if (fn < fnorm * (1.0 - 1e-4 * step) || fn < 1e-12) {
                u = trial;
                fnorm = fn;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        // refresh the lagged r_min outer-potential constant
        for (std::size_t i = 0; i < n; ++i) rho[i] = rho_of(u[i], g.r[i]);
        double tail = 0.0;
        for (std::size_t i = n - 1; i > 0; --i)
            tail += 0.5 * (g.r[i] - g.r[i - 1]) * 4.0 * std::numbers::pi *
                    (g.r[i - 1] * rho[i - 1] + g.r[i] * rho[i]);
        out0 = tail;
        fnorm = residual_norm(u);
    }

    // profiles and the integral-form self-consistency defect
    for (std::size_t i = 0; i < n; ++i) rho[i] = rho_of(u[i], g.r[i]);
    std::vector<double> phi_rho = newton_potential(rho, g);
    double rres = 0.0, q = 0.0;
    std::vector<double> W(n);
    for (std::size_t i = 0; i < n; ++i) {
        W[i] = inp.Z / g.r[i] - phi_rho[i];
        double target = pressure_density(W[i] + lambda, pp);
        rres = std::max(rres, std::fabs(target - rho[i]) / (1.0 + rho[i]));
        q += g.w[i] * rho[i];
    }
    out.rho = std::move(rho);
    out.W = std::move(W);
    out.residual = rres;
    out.charge = q;
    if (u_out) *u_out = std::move(u);
    out.converged = (out.residual <= 1e-7);
    return out;
}

}  // namespace

double boundary_radius(double Z, double N, double B) {
    if (Z < 0 || N < 0 || B < 0 || N > Z * (1 + 1e-12))
        throw domain_error("boundary_radius: need Z >= N >= 0, B >= 0");
    const double inf = std::numeric_limits<double>::infinity();
    const double rb = B > 0 ? std::pow(B, -0.25) : inf;
    const double dz = Z - N;
    const double rn = dz > 0 ? std::pow(dz, -1.0 / 3.0) : inf;
    return std::min(rb, rn);
}

double kinetic_density(double rho, double B) {
    if (rho <= 0) return 0.0;
    const PressureParams pp(B);
    // P'_B is increasing in w; invert by bisection, then Legendre transform
    double lo = 0.0, hi = 1.0;
    while (pressure_density(hi, pp) < rho) {
        hi *= 2.0;
        if (hi > 1e300) throw domain_error("kinetic_density: rho out of range");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (pressure_density(mid, pp) < rho)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * (1.0 + hi)) break;
    }
    const double w = 0.5 * (lo + hi);
    return rho * w - magnetic_pressure(w, pp);
}

TFSolution solve_tf_atom(const TFInputs& inp) {
    validate(inp);
    RadialGrid g = build_grid(inp);

    TFSolution sol;
    sol.grid = g;
    sol.r = g.r;

    const bool neutral = std::fabs(inp.N - inp.Z) <= 1e-12 * inp.Z;
    const double lam_scale = std::pow(inp.Z, 4.0 / 3.0);
    FixedPointResult fp;
    std::vector<double> warm;

    // cold solve at lambda = 0 is robust for B = 0; for B > 0 the density
    // edge is tangent there, so the neutral case is approached by warm-started
    // continuation lambda -> 0^-
    fp = solve_at_lambda(inp, g, 0.0, nullptr, &warm);
    sol.lambda = 0.0;
    bool have = fp.converged;

    if (!have || (!neutral && fp.charge > inp.N) ||
        (neutral && std::fabs(fp.charge - inp.N) > 1e-5 * inp.N)) {
        // continuation chain from a safely ionized lambda toward 0
        warm.clear();
        double lam = -0.05 * lam_scale;
        FixedPointResult f = solve_at_lambda(inp, g, lam, nullptr, &warm);
        while (f.converged && f.charge > inp.N) {
            lam *= 2.0;  // need a lower bracket
            if (lam < -1e6 * lam_scale)
                throw convergence_error("tf: lambda bracket failed", f.charge);
            f = solve_at_lambda(inp, g, lam, &warm, &warm);
        }
        if (!f.converged) throw convergence_error("tf: inner solve failed", f.residual);

        if (neutral) {
            // push lambda -> 0^- until the charge deficit is negligible
            fp = f;
            sol.lambda = lam;
            while (std::fabs(fp.charge - inp.N) > 1e-6 * inp.N &&
                   std::fabs(sol.lambda) > 1e-8 * lam_scale) {
                double next = sol.lambda / 3.0;
                FixedPointResult fn = solve_at_lambda(inp, g, next, &warm, &warm);
                if (!fn.converged) break;  // numerical tangency floor
                fp = fn;
                sol.lambda = next;
            }
            have = true;
        } else {
            // bisection on N(lambda), increasing in lambda
            double lam_lo = lam, lam_hi = 0.0;
            FixedPointResult fmid = f;
            double lam_good = lam;
            for (int it = 0; it < 80; ++it) {
                const double lmid = 0.5 * (lam_lo + lam_hi);
                FixedPointResult fn = solve_at_lambda(inp, g, lmid, &warm, &warm);
                if (!fn.converged) {
                    // tangency floor near lambda = 0: keep the ionized side
                    lam_hi = lmid;
                    continue;
                }
                fmid = fn;
                lam_good = lmid;
                if (fmid.charge > inp.N)
                    lam_hi = lmid;
                else
                    lam_lo = lmid;
                if (std::fabs(fmid.charge - inp.N) < 1e-7 * inp.N) break;
            }
            fp = fmid;
            sol.lambda = lam_good;
            have = true;
        }
    }
    if (!have || !fp.converged)
        throw convergence_error("tf: fixed point did not converge", fp.residual);

    sol.rho = fp.rho;
    sol.W = fp.W;
    sol.charge = fp.charge;
    sol.residual = fp.residual;
    sol.iterations = fp.iterations;

    TFEnergy e = tf_energy(sol, inp);
    sol.energy_primal = e.primal;
    sol.energy_dual = e.dual;
    sol.dual_gap = e.gap;
    return sol;
}

double chemical_potential(const TFInputs& inp) { return solve_tf_atom(inp).lambda; }

TFEnergy tf_energy(const TFSolution& sol, const TFInputs& inp) {
    const RadialGrid& g = sol.grid;
    const std::size_t n = g.size();
    if (sol.rho.size() != n || sol.W.size() != n) throw domain_error("tf_energy: bad solution");
    const PressureParams pp(inp.B);

    double kin = 0.0, ext = 0.0, pres = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        kin += g.w[i] * kinetic_density(sol.rho[i], inp.B);
        ext += g.w[i] * (inp.Z / g.r[i]) * sol.rho[i];
        pres += g.w[i] * magnetic_pressure(sol.W[i] + sol.lambda, pp);
    }
    const double dee = coulomb_d(sol.rho, sol.rho, g);

    TFEnergy e;
    e.primal = kin - ext + dee;
    e.dual = -pres - dee + sol.lambda * inp.N;
    e.gap = std::fabs(e.primal - e.dual);
    return e;
}

void write_tf_solution(const TFSolution& sol, const TFInputs& inp, std::ostream& os) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "# Z=%.17g N=%.17g B=%.17g lambda=%.17g energy_primal=%.17g "
                  "energy_dual=%.17g dual_gap=%.17g charge=%.17g\n",
                  inp.Z, inp.N, inp.B, sol.lambda, sol.energy_primal, sol.energy_dual,
                  sol.dual_gap, sol.charge);
    os << buf << "# r W rho\n";
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", sol.r[i], sol.W[i], sol.rho[i]);
        os << buf;
    }
}

}  // namespace magtf
