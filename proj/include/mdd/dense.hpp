#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "mdd/package.hpp"

namespace mdd {

/// Basis state on lines [bottom, bottom + digits.size()). The lowest node
/// points straight to the terminal, so a state built with bottom > 0 can be
/// the left operand of kron.
Edge basis_state(Package& pkg, std::span<const std::size_t> digits, std::size_t bottom = 0);

/// |0...0> over the whole register.
Edge zero_state(Package& pkg);

/// Builds the DD of a dense vector over lines [bottom, top], where top is
/// determined by the vector length. Throws InputError if no top line fits.
Edge from_dense_vector(Package& pkg, const Eigen::VectorXcd& v, std::size_t bottom = 0);

/// Dense reconstruction over lines [bottom, top].
Eigen::VectorXcd to_dense_vector(const Package& pkg, const Edge& root, std::size_t bottom, std::size_t top);
Eigen::VectorXcd to_dense_vector(const Package& pkg, const Edge& root);

Eigen::MatrixXcd to_dense_matrix(const Package& pkg, const Edge& root, std::size_t bottom, std::size_t top);
Eigen::MatrixXcd to_dense_matrix(const Package& pkg, const Edge& root);

}  // namespace mdd
