#include "magtf/field3d.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>

#include "magtf/errors.hpp"

namespace magtf {

Field3D::Field3D(std::array<double, 3> org, std::array<double, 3> spc, std::array<int, 3> d,
                 int ncomp_)
    : origin(org), spacing(spc), dims(d), ncomp(ncomp_) {
    for (int ax = 0; ax < 3; ++ax) {
        if (spacing[ax] <= 0) throw domain_error("Field3D: spacing must be positive");
        if (dims[ax] < 2) throw domain_error("Field3D: dims must be >= 2");
    }
    if (ncomp != 1 && ncomp != 3) throw domain_error("Field3D: ncomp must be 1 or 3");
    values.assign(npoints() * ncomp, 0.0);
}

double integrate(const Field3D& f, int c) {
    double s = 0.0;
    const std::size_t n = f.npoints();
    for (std::size_t p = 0; p < n; ++p) s += f.values[p * f.ncomp + c];
    return s * f.cell_volume();
}

double centered_diff(const Field3D& f, int i, int j, int k, int axis, int c) {
    int di = axis == 0, dj = axis == 1, dk = axis == 2;
    return (f.at(i + di, j + dj, k + dk, c) - f.at(i - di, j - dj, k - dk, c)) /
           (2.0 * f.spacing[axis]);
}

namespace {
// quintic smoothstep, C^2 at both ends
double smooth01(double s) {
    if (s <= 0) return 0.0;
    if (s >= 1) return 1.0;
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}
}  // namespace

Field3D bump_cutoff(std::array<double, 3> org, std::array<double, 3> spc,
                    std::array<int, 3> dims, std::array<double, 3> center, double R) {
    if (R <= 0) throw domain_error("bump_cutoff: R must be positive");
    return sample_scalar(org, spc, dims, [&](double x, double y, double z) {
        double r = std::sqrt((x - center[0]) * (x - center[0]) +
                             (y - center[1]) * (y - center[1]) +
                             (z - center[2]) * (z - center[2]));
        double u = r / R;
        return 1.0 - smooth01(2.0 * u - 1.0);
    });
}

namespace {
constexpr char kMagic[8] = {'M', 'T', 'F', '3', 'D', '1', '\n', 0};
}

void write_field_binary(const Field3D& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw domain_error("cannot open for write: " + path);
    os.write(kMagic, 8);
    std::int32_t meta[4] = {f.ncomp, f.dims[0], f.dims[1], f.dims[2]};
    os.write(reinterpret_cast<const char*>(meta), sizeof meta);
    os.write(reinterpret_cast<const char*>(f.origin.data()), 3 * sizeof(double));
    os.write(reinterpret_cast<const char*>(f.spacing.data()), 3 * sizeof(double));
    os.write(reinterpret_cast<const char*>(f.values.data()),
             static_cast<std::streamsize>(f.values.size() * sizeof(double)));
}

Field3D read_field_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw domain_error("cannot open for read: " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0)
        throw parse_error("not a magtf field file: " + path);
    std::int32_t meta[4];
    is.read(reinterpret_cast<char*>(meta), sizeof meta);
    std::array<double, 3> org, spc;
    is.read(reinterpret_cast<char*>(org.data()), 3 * sizeof(double));
    is.read(reinterpret_cast<char*>(spc.data()), 3 * sizeof(double));
    Field3D f(org, spc, {meta[1], meta[2], meta[3]}, meta[0]);
    is.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!is) throw parse_error("truncated field file: " + path);
    return f;
}

void write_field_csv(const Field3D& f, std::ostream& os) {
    os << "x,y,z";
    if (f.ncomp == 1)
        os << ",v\n";
    else
        os << ",v1,v2,v3\n";
    char buf[64];
    for (int i = 0; i < f.dims[0]; ++i)
        for (int j = 0; j < f.dims[1]; ++j)
            for (int k = 0; k < f.dims[2]; ++k) {
                os << f.coord(i, 0) << ',' << f.coord(j, 1) << ',' << f.coord(k, 2);
                for (int c = 0; c < f.ncomp; ++c) {
                    std::snprintf(buf, sizeof buf, "%.17g", f.at(i, j, k, c));
                    os << ',' << buf;
                }
                os << '\n';
            }
}

}  // namespace magtf
