#pragma once

#include "magtf/field3d.hpp"

namespace magtf {

/// Solve Delta a = s on the grid of s with decay at infinity: boundary values
/// come from the free-space Green integral -(1/4pi) sum s(y)/|x-y| dV and the
/// interior is solved exactly for the 7-point discrete Laplacian (sine
/// transforms), so ||Delta_h a - s|| over interior nodes is at round-off.
Field3D solve_vector_poisson(const Field3D& s);

// 7-point Laplacian at an interior node.
double discrete_laplacian(const Field3D& f, int i, int j, int k, int c = 0);

}  // namespace magtf
