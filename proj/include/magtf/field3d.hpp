#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace magtf {

/// Scalar or 3-vector field sampled on a uniform box grid.
/// Storage is row-major over (i, j, k) with the component index innermost.
struct Field3D {
    std::array<double, 3> origin{0, 0, 0};
    std::array<double, 3> spacing{1, 1, 1};
    std::array<int, 3> dims{0, 0, 0};
    int ncomp = 1;
    std::vector<double> values;

    Field3D() = default;
    Field3D(std::array<double, 3> org, std::array<double, 3> spc, std::array<int, 3> d,
            int ncomp_ = 1);

    std::size_t npoints() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k;
    }
    double& at(int i, int j, int k, int c = 0) { return values[index(i, j, k) * ncomp + c]; }
    double at(int i, int j, int k, int c = 0) const { return values[index(i, j, k) * ncomp + c]; }

    double coord(int idx, int axis) const { return origin[axis] + idx * spacing[axis]; }
    std::array<double, 3> point(int i, int j, int k) const {
        return {coord(i, 0), coord(j, 1), coord(k, 2)};
    }
    double cell_volume() const { return spacing[0] * spacing[1] * spacing[2]; }

    bool same_grid(const Field3D& o) const {
        return origin == o.origin && spacing == o.spacing && dims == o.dims;
    }
};

// Sum of component c over all nodes times the cell volume.
double integrate(const Field3D& f, int c = 0);

// Centered difference of component c along axis at an interior node.
double centered_diff(const Field3D& f, int i, int j, int k, int axis, int c = 0);

// Fill a scalar field from a callable f(x, y, z).
template <class F>
Field3D sample_scalar(std::array<double, 3> org, std::array<double, 3> spc,
                      std::array<int, 3> dims, F&& f) {
    Field3D out(org, spc, dims, 1);
    for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
            for (int k = 0; k < dims[2]; ++k)
                out.at(i, j, k) = f(out.coord(i, 0), out.coord(j, 1), out.coord(k, 2));
    return out;
}

// C^2 radial cutoff: 1 for |x-c| <= R/2, 0 for |x-c| >= R, quintic in between.
Field3D bump_cutoff(std::array<double, 3> org, std::array<double, 3> spc,
                    std::array<int, 3> dims, std::array<double, 3> center, double R);

// Flat binary block (fixed header + row-major doubles) and CSV for plotting.
void write_field_binary(const Field3D& f, const std::string& path);
Field3D read_field_binary(const std::string& path);
void write_field_csv(const Field3D& f, std::ostream& os);

}  // namespace magtf
