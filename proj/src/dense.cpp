#include "mdd/dense.hpp"

#include <string>
#include <vector>

#include "mdd/errors.hpp"

namespace mdd {

namespace {

std::size_t block_below(const Package& pkg, std::size_t bottom, int level) {
  if (level <= static_cast<int>(bottom)) return 1;
  return pkg.reg().block_dimension(bottom, static_cast<std::size_t>(level) - 1);
}

Edge build_vector(Package& pkg, const Eigen::VectorXcd& v, Eigen::Index offset, std::size_t bottom, int level) {
  if (level < static_cast<int>(bottom)) return pkg.scalar(v[offset]);
  const auto d = pkg.reg().dim(static_cast<std::size_t>(level));
  const auto block = static_cast<Eigen::Index>(block_below(pkg, bottom, level));
  std::vector<Edge> children;
  children.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    children.push_back(build_vector(pkg, v, offset + static_cast<Eigen::Index>(k) * block, bottom, level - 1));
  }
  return pkg.make_node(level, NodeKind::Vector, std::move(children));
}

void fill_vector(const Package& pkg, const Edge& e, Complex factor, Eigen::VectorXcd& out, Eigen::Index offset,
                 std::size_t bottom, int level) {
  if (e.is_zero()) return;
  factor *= e.weight.value();
  if (level < static_cast<int>(bottom)) {
    if (!e.is_terminal()) throw StructuralError("to_dense_vector: DD extends below the requested range");
    out[offset] = factor;
    return;
  }
  if (e.level() != level) {
    throw StructuralError("to_dense_vector: expected node at level " + std::to_string(level));
  }
  const auto d = pkg.reg().dim(static_cast<std::size_t>(level));
  const auto block = static_cast<Eigen::Index>(block_below(pkg, bottom, level));
  for (std::size_t k = 0; k < d; ++k) {
    fill_vector(pkg, Edge{e.node->children[k].node, e.node->children[k].weight}, factor, out,
                offset + static_cast<Eigen::Index>(k) * block, bottom, level - 1);
  }
}

void fill_matrix(const Package& pkg, const Edge& e, Complex factor, Eigen::MatrixXcd& out, Eigen::Index row,
                 Eigen::Index col, std::size_t bottom, int level) {
  if (e.is_zero()) return;
  factor *= e.weight.value();
  if (level < static_cast<int>(bottom)) {
    if (!e.is_terminal()) throw StructuralError("to_dense_matrix: DD extends below the requested range");
    out(row, col) = factor;
    return;
  }
  if (e.level() != level) {
    throw StructuralError("to_dense_matrix: expected node at level " + std::to_string(level));
  }
  const auto d = pkg.reg().dim(static_cast<std::size_t>(level));
  const auto block = static_cast<Eigen::Index>(block_below(pkg, bottom, level));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      fill_matrix(pkg, e.node->children[r * d + c], factor, out, row + static_cast<Eigen::Index>(r) * block,
                  col + static_cast<Eigen::Index>(c) * block, bottom, level - 1);
    }
  }
}

}  // namespace

Edge basis_state(Package& pkg, std::span<const std::size_t> digits, std::size_t bottom) {
  const auto& reg = pkg.reg();
  if (digits.empty() || bottom + digits.size() > reg.size()) {
    throw InputError("basis_state: digits do not fit the register");
  }
  Edge e = pkg.one();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const auto line = bottom + i;
    if (digits[i] >= reg.dim(line)) {
      throw InputError("basis_state: digit " + std::to_string(digits[i]) + " out of range for qudit " +
                       std::to_string(line));
    }
    std::vector<Edge> children(reg.dim(line), pkg.zero());
    children[digits[i]] = e;
    e = pkg.make_node(static_cast<int>(line), NodeKind::Vector, std::move(children));
  }
  return e;
}

Edge zero_state(Package& pkg) {
  const std::vector<std::size_t> digits(pkg.reg().size(), 0);
  return basis_state(pkg, digits);
}

Edge from_dense_vector(Package& pkg, const Eigen::VectorXcd& v, std::size_t bottom) {
  const auto& reg = pkg.reg();
  std::size_t size = 1;
  for (std::size_t top = bottom; top < reg.size(); ++top) {
    size *= reg.dim(top);
    if (size == static_cast<std::size_t>(v.size())) {
      return build_vector(pkg, v, 0, bottom, static_cast<int>(top));
    }
    if (size > static_cast<std::size_t>(v.size())) break;
  }
  throw InputError("from_dense_vector: length " + std::to_string(v.size()) +
                   " is not a product of consecutive register dimensions");
}

Eigen::VectorXcd to_dense_vector(const Package& pkg, const Edge& root, std::size_t bottom, std::size_t top) {
  const auto size = pkg.reg().block_dimension(bottom, top);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size));
  fill_vector(pkg, root, Complex{1.0, 0.0}, out, 0, bottom, static_cast<int>(top));
  return out;
}

Eigen::VectorXcd to_dense_vector(const Package& pkg, const Edge& root) {
  return to_dense_vector(pkg, root, 0, pkg.reg().size() - 1);
}

Eigen::MatrixXcd to_dense_matrix(const Package& pkg, const Edge& root, std::size_t bottom, std::size_t top) {
  const auto size = static_cast<Eigen::Index>(pkg.reg().block_dimension(bottom, top));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  fill_matrix(pkg, root, Complex{1.0, 0.0}, out, 0, 0, bottom, static_cast<int>(top));
  return out;
}

Eigen::MatrixXcd to_dense_matrix(const Package& pkg, const Edge& root) {
  return to_dense_matrix(pkg, root, 0, pkg.reg().size() - 1);
}

}  // namespace mdd
