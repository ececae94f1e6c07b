#pragma once

#include "spolya/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spolya {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

RatMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m);
RatMatrix transpose(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m, std::size_t cols);
// Same basis with each vector scaled to a primitive integer vector.
std::vector<std::vector<Integer>> integer_kernel_basis(const RatMatrix& m, std::size_t cols);

Rational determinant(RatMatrix m);
// Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace spolya
