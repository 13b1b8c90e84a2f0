#pragma once

#include <span>

#include "mdd/package.hpp"
#include "mdd/register.hpp"
#include "mdd/rng.hpp"

namespace mdd {

/// x ⊗ y. The lowest nodes of x must sit one level above the root of y; the
/// terminal edges of x are redirected to y. Visits each node of x once.
Edge kron(Package& pkg, const Edge& x, const Edge& y);

/// Matrix-vector product m·v over the same levels.
Edge multiply(Package& pkg, const Edge& m, const Edge& v);

/// Matrix-matrix product a·b over the same levels.
Edge multiply_mm(Package& pkg, const Edge& a, const Edge& b);

/// Elementwise sum of two DDs of the same kind over the same levels.
Edge add(Package& pkg, const Edge& x, const Edge& y);

/// Product of the weights along the path selected by `digits` (one digit per line).
Complex get_amplitude(const Package& pkg, const Edge& root, std::span<const std::size_t> digits);

/// Matrix entry <row|M|col>; each level selects successor row_digit*d + col_digit.
Complex get_matrix_entry(const Package& pkg, const Edge& root, std::span<const std::size_t> row,
                         std::span<const std::size_t> col);

/// <a|b>, conjugate-linear in a.
Complex inner_product(Package& pkg, const Edge& a, const Edge& b);

/// One measurement of all qudits. Consumes one uniform draw per level.
/// Throws InputError if the root is not normalized within 1e-10.
BasisIndex sample(const Package& pkg, const Edge& root, Rng& rng);

}  // namespace mdd
