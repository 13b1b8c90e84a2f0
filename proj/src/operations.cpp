#include "mdd/operations.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mdd/errors.hpp"

namespace mdd {

namespace {

bool is_kind(const Edge& e, NodeKind kind) { return e.is_terminal() || e.node->kind == kind; }

void require_same_level(const Edge& x, const Edge& y, const char* op) {
  if (x.level() != y.level()) {
    throw StructuralError(std::string(op) + ": operands span different levels (" + std::to_string(x.level()) +
                          " vs " + std::to_string(y.level()) + ")");
  }
}

class Engine {
 public:
  explicit Engine(Package& pkg) : pkg_(pkg), caching_(pkg.config().caching) {}

  Edge add(const Edge& x, const Edge& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.node == y.node) {
      const auto w = pkg_.numbers().add(x.weight, y.weight);
      return w == pkg_.numbers().zero() ? pkg_.zero() : Edge{x.node, w};
    }
    require_same_level(x, y, "add");

    // Addition commutes; order the key so both argument orders share a slot.
    const auto& [lo, hi] = std::less<>{}(x.node, y.node) ? std::pair{x, y} : std::pair{y, x};
    const WeightedPairKey key{lo.node, lo.weight.id(), hi.node, hi.weight.id()};
    if (caching_) {
      if (auto hit = pkg_.caches().add.find(key)) return *hit;
    }
    ++pkg_.counters().add_expansions;

    auto& numbers = pkg_.numbers();
    std::vector<Edge> children(x.node->children.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto& xc = x.node->children[i];
      const auto& yc = y.node->children[i];
      children[i] = add(Edge{xc.node, numbers.mul(x.weight, xc.weight)},
                        Edge{yc.node, numbers.mul(y.weight, yc.weight)});
    }
    const auto result = pkg_.make_node(x.level(), x.node->kind, std::move(children));
    if (caching_) pkg_.caches().add.insert(key, result);
    return result;
  }

  // Product of two DDs whose root weights are factored out; the result is
  // cached on node identities only.
  Edge multiply(const Edge& x, const Edge& y) {
    if (x.is_zero() || y.is_zero()) return pkg_.zero();
    const auto w = pkg_.numbers().mul(x.weight, y.weight);
    if (x.is_terminal() && y.is_terminal()) return pkg_.scalar(w);
    require_same_level(x, y, "multiply");
    if (x.node->identity) return pkg_.scale(Edge{y.node, pkg_.numbers().one()}, w);
    if (y.node->identity && y.node->kind == NodeKind::Matrix) {
      return pkg_.scale(Edge{x.node, pkg_.numbers().one()}, w);
    }
    return pkg_.scale(multiply_nodes(x.node, y.node), w);
  }

  Edge kron(const Edge& x, const Edge& y) {
    if (x.is_zero() || y.is_zero()) return pkg_.zero();
    const auto w = pkg_.numbers().mul(x.weight, y.weight);
    if (x.is_terminal()) return pkg_.scale(Edge{y.node, pkg_.numbers().one()}, w);
    return pkg_.scale(kron_nodes(x.node, y.node), w);
  }

  Complex inner(const Edge& a, const Edge& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Complex w = std::conj(a.weight.value()) * b.weight.value();
    if (a.is_terminal() && b.is_terminal()) return w;
    require_same_level(a, b, "inner_product");
    return w * inner_nodes(a.node, b.node);
  }

 private:
  Edge multiply_nodes(Node* x, Node* y) {
    const NodePairKey key{x, y};
    if (caching_) {
      if (auto hit = pkg_.caches().multiply.find(key)) return *hit;
    }
    ++pkg_.counters().multiply_expansions;

    const auto d = pkg_.reg().dim(static_cast<std::size_t>(x->level));
    const bool matrix_result = y->kind == NodeKind::Matrix;
    // Block recursion: result block (i, j) = sum_k x(i, k) * y(k, j); vectors have a single column.
    const std::size_t cols = matrix_result ? d : 1;
    std::vector<Edge> children(d * cols, pkg_.zero());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Edge acc = pkg_.zero();
        for (std::size_t k = 0; k < d; ++k) {
          const auto& xe = x->children[d * i + k];
          const auto& ye = y->children[j + cols * k];
          acc = add(acc, multiply(xe, ye));
        }
        children[cols * i + j] = acc;
      }
    }
    const auto result = pkg_.make_node(x->level, y->kind, std::move(children));
    if (caching_) pkg_.caches().multiply.insert(key, result);
    return result;
  }

  Edge kron_nodes(Node* x, Node* y) {
    const NodePairKey key{x, y};
    if (caching_) {
      if (auto hit = pkg_.caches().kron.find(key)) return *hit;
    }
    ++pkg_.counters().kron_expansions;

    std::vector<Edge> children(x->children.size(), pkg_.zero());
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto& xc = x->children[i];
      if (xc.is_zero()) continue;
      if (xc.is_terminal() && x->level != y->level + 1) {
        throw StructuralError("kron: right operand must start at level " + std::to_string(x->level - 1) +
                              ", starts at " + std::to_string(y->level));
      }
      children[i] = kron(xc, Edge{y, pkg_.numbers().one()});
    }
    const auto result = pkg_.make_node(x->level, x->kind, std::move(children));
    if (caching_) pkg_.caches().kron.insert(key, result);
    return result;
  }

  Complex inner_nodes(Node* a, Node* b) {
    const NodePairKey key{a, b};
    if (caching_) {
      if (auto hit = pkg_.caches().inner.find(key)) return *hit;
    }
    ++pkg_.counters().inner_expansions;
    Complex sum{};
    for (std::size_t i = 0; i < a->children.size(); ++i) sum += inner(a->children[i], b->children[i]);
    if (caching_) pkg_.caches().inner.insert(key, sum);
    return sum;
  }

  Package& pkg_;
  bool caching_;
};

void check_kind(const Edge& e, NodeKind kind, const char* op, const char* what) {
  if (!is_kind(e, kind)) {
    throw StructuralError(std::string(op) + ": " + what + " operand has the wrong kind");
  }
}

void check_full_register(const Package& pkg, const Edge& root, const char* op) {
  if (!root.is_zero() && root.level() != static_cast<int>(pkg.reg().size()) - 1) {
    throw StructuralError(std::string(op) + ": root does not span the register");
  }
}

void check_digits(const Package& pkg, std::span<const std::size_t> digits) {
  const auto& reg = pkg.reg();
  if (digits.size() != reg.size()) {
    throw InputError("basis index has " + std::to_string(digits.size()) + " digits, register has " +
                     std::to_string(reg.size()));
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= reg.dim(i)) {
      throw InputError("digit " + std::to_string(digits[i]) + " out of range for qudit " + std::to_string(i) +
                       " of dimension " + std::to_string(reg.dim(i)));
    }
  }
}

}  // namespace

Edge kron(Package& pkg, const Edge& x, const Edge& y) {
  if (!x.is_terminal() && !y.is_terminal() && x.node->kind != y.node->kind) {
    throw StructuralError("kron: operands have different kinds");
  }
  if (!x.is_zero() && !y.is_zero() && !x.is_terminal() && x.level() <= y.level()) {
    throw StructuralError("kron: right operand must lie strictly below the left operand");
  }
  return Engine(pkg).kron(x, y);
}

Edge multiply(Package& pkg, const Edge& m, const Edge& v) {
  check_kind(m, NodeKind::Matrix, "multiply", "matrix");
  check_kind(v, NodeKind::Vector, "multiply", "vector");
  if (!m.is_zero() && !v.is_zero()) require_same_level(m, v, "multiply");
  return Engine(pkg).multiply(m, v);
}

Edge multiply_mm(Package& pkg, const Edge& a, const Edge& b) {
  check_kind(a, NodeKind::Matrix, "multiply_mm", "left");
  check_kind(b, NodeKind::Matrix, "multiply_mm", "right");
  if (!a.is_zero() && !b.is_zero()) require_same_level(a, b, "multiply_mm");
  return Engine(pkg).multiply(a, b);
}

Edge add(Package& pkg, const Edge& x, const Edge& y) {
  if (!x.is_terminal() && !y.is_terminal() && x.node->kind != y.node->kind) {
    throw StructuralError("add: operands have different kinds");
  }
  if (!x.is_zero() && !y.is_zero()) require_same_level(x, y, "add");
  return Engine(pkg).add(x, y);
}

Complex get_amplitude(const Package& pkg, const Edge& root, std::span<const std::size_t> digits) {
  check_digits(pkg, digits);
  check_kind(root, NodeKind::Vector, "get_amplitude", "state");
  Complex amp = root.weight.value();
  Edge e = root;
  while (!e.is_terminal()) {
    e = e.node->children[digits[static_cast<std::size_t>(e.level())]];
    if (e.is_zero()) return {};
    amp *= e.weight.value();
  }
  return amp;
}

Complex get_matrix_entry(const Package& pkg, const Edge& root, std::span<const std::size_t> row,
                         std::span<const std::size_t> col) {
  check_digits(pkg, row);
  check_digits(pkg, col);
  check_kind(root, NodeKind::Matrix, "get_matrix_entry", "operator");
  Complex entry = root.weight.value();
  Edge e = root;
  while (!e.is_terminal()) {
    const auto level = static_cast<std::size_t>(e.level());
    const auto d = pkg.reg().dim(level);
    e = e.node->children[row[level] * d + col[level]];
    if (e.is_zero()) return {};
    entry *= e.weight.value();
  }
  return entry;
}

Complex inner_product(Package& pkg, const Edge& a, const Edge& b) {
  check_kind(a, NodeKind::Vector, "inner_product", "left");
  check_kind(b, NodeKind::Vector, "inner_product", "right");
  if (!a.is_zero() && !b.is_zero()) require_same_level(a, b, "inner_product");
  return Engine(pkg).inner(a, b);
}

BasisIndex sample(const Package& pkg, const Edge& root, Rng& rng) {
  check_kind(root, NodeKind::Vector, "sample", "state");
  // Every vector node is normalized, so the state norm is |root weight|.
  if (std::abs(std::norm(root.weight.value()) - 1.0) > 1e-10) {
    throw InputError("sample: state is not normalized (norm^2 = " + std::to_string(std::norm(root.weight.value())) +
                     ")");
  }
  check_full_register(pkg, root, "sample");

  BasisIndex digits(pkg.reg().size(), 0);
  Edge e = root;
  while (!e.is_terminal()) {
    const auto& children = e.node->children;
    double total = 0.0;
    for (const auto& c : children) total += std::norm(c.weight.value());
    const double u = rng.uniform() * total;
    double cumulative = 0.0;
    std::size_t pick = children.size();
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].is_zero()) continue;
      cumulative += std::norm(children[i].weight.value());
      pick = i;
      if (u < cumulative) break;
    }
    digits[static_cast<std::size_t>(e.level())] = pick;
    e = children[pick];
  }
  return digits;
}

}  // namespace mdd
