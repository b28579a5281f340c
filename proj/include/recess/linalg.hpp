#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "recess/geometry.hpp"

namespace recess::linalg {

/// Dense row-major rational matrix.
using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t n);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : M x = 0}, one vector per free column, exact.
std::vector<Vector> nullspace(Matrix m, std::size_t cols);

/// Solution of the square system A x = b, or nullopt if A is singular.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& a);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

}  // namespace recess::linalg
