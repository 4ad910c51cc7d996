#pragma once

#include <optional>
#include <vector>

#include "quanthelly/geometry.hpp"

namespace quanthelly::detail {

using Matrix = std::vector<Vector>;

// Exact Gauss–Jordan elimination over the rationals.

Scalar determinant(Matrix a);
std::optional<Matrix> inverse(Matrix a);
int rank(Matrix a);
// Solves a x = b for square nonsingular a.
std::optional<Vector> solve(Matrix a, Vector b);
// Row vector times matrix.
Vector row_times(const Vector& row, const Matrix& m);

}  // namespace quanthelly::detail
