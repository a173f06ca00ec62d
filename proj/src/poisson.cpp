#include "magtf/poisson.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "magtf/errors.hpp"

namespace magtf {

double discrete_laplacian(const Field3D& f, int i, int j, int k, int c) {
    double s = 0.0;
    s += (f.at(i + 1, j, k, c) - 2 * f.at(i, j, k, c) + f.at(i - 1, j, k, c)) /
         (f.spacing[0] * f.spacing[0]);
    s += (f.at(i, j + 1, k, c) - 2 * f.at(i, j, k, c) + f.at(i, j - 1, k, c)) /
         (f.spacing[1] * f.spacing[1]);
    s += (f.at(i, j, k + 1, c) - 2 * f.at(i, j, k, c) + f.at(i, j, k - 1, c)) /
         (f.spacing[2] * f.spacing[2]);
    return s;
}

namespace {

// entries of the compact source list used for the boundary Green sum
struct SourcePoint {
    double x, y, z, q;  // q = s * dV
};

void dst_lines(std::vector<double>& data, int m0, int m1, int m2, int axis,
               const std::vector<double>& mat) {
    // multiply along `axis` by the DST-I matrix (m x m); data indexed (i0*m1+i1)*m2+i2
    const int m[3] = {m0, m1, m2};
    const int n = m[axis];
    std::vector<double> line(n), res(n);
    int outer0 = axis == 0 ? m1 : m0;
    int outer1 = axis == 2 ? m1 : m2;
    for (int a = 0; a < outer0; ++a)
        for (int b = 0; b < outer1; ++b) {
            for (int t = 0; t < n; ++t) {
                int i = axis == 0 ? t : a;
                int j = axis == 1 ? t : (axis == 0 ? a : b);
                int k = axis == 2 ? t : b;
                line[t] = data[(static_cast<std::size_t>(i) * m1 + j) * m2 + k];
            }
            for (int u = 0; u < n; ++u) {
                double acc = 0.0;
                const double* row = &mat[static_cast<std::size_t>(u) * n];
                for (int t = 0; t < n; ++t) acc += row[t] * line[t];
                res[u] = acc;
            }
            for (int t = 0; t < n; ++t) {
                int i = axis == 0 ? t : a;
                int j = axis == 1 ? t : (axis == 0 ? a : b);
                int k = axis == 2 ? t : b;
                data[(static_cast<std::size_t>(i) * m1 + j) * m2 + k] = res[t];
            }
        }
}

std::vector<double> dst_matrix(int m) {
    std::vector<double> mat(static_cast<std::size_t>(m) * m);
    for (int u = 0; u < m; ++u)
        for (int t = 0; t < m; ++t)
            mat[static_cast<std::size_t>(u) * m + t] =
                std::sin(std::numbers::pi * (u + 1) * (t + 1) / (m + 1));
    return mat;
}

}  // namespace

Field3D solve_vector_poisson(const Field3D& s) {
    if (s.ncomp != 1) throw domain_error("solve_vector_poisson: scalar source expected");
    const int nx = s.dims[0], ny = s.dims[1], nz = s.dims[2];
    if (nx < 4 || ny < 4 || nz < 4) throw domain_error("solve_vector_poisson: grid too small");

    // compact support check and source list
    std::vector<SourcePoint> src;
    src.reserve(1024);
    double smax = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k) smax = std::max(smax, std::fabs(s.at(i, j, k)));
    const double cut = smax * 1e-300;  // keep every numerically nonzero node
    const double dV = s.cell_volume();
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k) {
                double q = s.at(i, j, k);
                if (std::fabs(q) > cut) {
                    if (i == 0 || i == nx - 1 || j == 0 || j == ny - 1 || k == 0 || k == nz - 1)
                        throw domain_error("solve_vector_poisson: source touches the boundary");
                    src.push_back({s.coord(i, 0), s.coord(j, 1), s.coord(k, 2), q * dV});
                }
            }

    Field3D a(s.origin, s.spacing, s.dims, 1);
    if (src.empty()) return a;

    // boundary values from the free-space Green integral
    constexpr double inv4pi = 1.0 / (4.0 * std::numbers::pi);
    auto green_at = [&](double x, double y, double z) {
        double acc = 0.0;
        for (const auto& p : src) {
            double dx = x - p.x, dy = y - p.y, dz = z - p.z;
            acc += p.q / std::sqrt(dx * dx + dy * dy + dz * dz);
        }
        return -inv4pi * acc;
    };
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k)
                if (i == 0 || i == nx - 1 || j == 0 || j == ny - 1 || k == 0 || k == nz - 1)
                    a.at(i, j, k) = green_at(s.coord(i, 0), s.coord(j, 1), s.coord(k, 2));

    // interior: Delta_h a = s with the boundary values moved to the RHS
    const int mx = nx - 2, my = ny - 2, mz = nz - 2;
    const double ix2 = 1.0 / (s.spacing[0] * s.spacing[0]);
    const double iy2 = 1.0 / (s.spacing[1] * s.spacing[1]);
    const double iz2 = 1.0 / (s.spacing[2] * s.spacing[2]);
    std::vector<double> rhs(static_cast<std::size_t>(mx) * my * mz);
    for (int i = 1; i <= mx; ++i)
        for (int j = 1; j <= my; ++j)
            for (int k = 1; k <= mz; ++k) {
                double v = s.at(i, j, k);
                if (i == 1) v -= a.at(0, j, k) * ix2;
                if (i == mx) v -= a.at(nx - 1, j, k) * ix2;
                if (j == 1) v -= a.at(i, 0, k) * iy2;
                if (j == my) v -= a.at(i, ny - 1, k) * iy2;
                if (k == 1) v -= a.at(i, j, 0) * iz2;
                if (k == mz) v -= a.at(i, j, nz - 1) * iz2;
                rhs[(static_cast<std::size_t>(i - 1) * my + (j - 1)) * mz + (k - 1)] = v;
            }

    auto matx = dst_matrix(mx), maty = dst_matrix(my), matz = dst_matrix(mz);
    dst_lines(rhs, mx, my, mz, 0, matx);
    dst_lines(rhs, mx, my, mz, 1, maty);
    dst_lines(rhs, mx, my, mz, 2, matz);

    auto eig = [](int t, int m, double inv2) {
        double sn = std::sin(0.5 * std::numbers::pi * (t + 1) / (m + 1));
        return -4.0 * sn * sn * inv2;
    };
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < my; ++j)
            for (int k = 0; k < mz; ++k) {
                double lam = eig(i, mx, ix2) + eig(j, my, iy2) + eig(k, mz, iz2);
                rhs[(static_cast<std::size_t>(i) * my + j) * mz + k] /= lam;
            }

    dst_lines(rhs, mx, my, mz, 0, matx);
    dst_lines(rhs, mx, my, mz, 1, maty);
    dst_lines(rhs, mx, my, mz, 2, matz);
    const double norm = 8.0 / ((mx + 1.0) * (my + 1.0) * (mz + 1.0));
    for (int i = 1; i <= mx; ++i)
        for (int j = 1; j <= my; ++j)
            for (int k = 1; k <= mz; ++k)
                a.at(i, j, k) =
                    rhs[(static_cast<std::size_t>(i - 1) * my + (j - 1)) * mz + (k - 1)] * norm;

    return a;
}

}  // namespace magtf
