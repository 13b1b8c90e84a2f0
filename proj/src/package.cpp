#include "mdd/package.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <unordered_set>

#include "mdd/errors.hpp"

namespace mdd {

namespace {

std::size_t hash_node(const Node& n) {
  std::size_t h = hash_combine(static_cast<std::size_t>(n.level), static_cast<std::size_t>(n.kind));
  for (const auto& e : n.children) {
    h = hash_combine(h, std::hash<const void*>{}(e.node));
    h = hash_combine(h, std::hash<const void*>{}(e.weight.id()));
  }
  return h;
}

}  // namespace

Package::Package(QuditRegister reg, PackageConfig config)
    : reg_(std::move(reg)),
      config_(config),
      numbers_(config.tolerance),
      identity_cache_(reg_.size()),
      gc_limit_(config.gc_threshold) {
  terminal_.level = -1;
  terminal_.identity = true;
}

std::size_t Package::arity(int level, NodeKind kind) const {
  const auto d = reg_.dim(static_cast<std::size_t>(level));
  return kind == NodeKind::Vector ? d : d * d;
}

Edge Package::scale(const Edge& e, CanonicalComplex factor) {
  const auto w = numbers_.mul(e.weight, factor);
  if (w == numbers_.zero()) return zero();
  return Edge{e.node, w};
}

CanonicalComplex Package::normalize(NodeKind kind, std::vector<Edge>& children) {
  const double tol = numbers_.tolerance();
  const auto stub = zero();

  if (kind == NodeKind::Vector) {
    double norm_sq = 0.0;
    for (const auto& e : children) norm_sq += std::norm(e.weight.value());
    const double norm = std::sqrt(norm_sq);
    std::size_t pivot = children.size();
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].is_zero()) continue;
      // Components that would canonicalize to zero after scaling become stubs now.
      if (std::abs(children[i].weight.value()) / norm <= 2.0 * tol) {
        children[i] = stub;
        continue;
      }
      if (pivot == children.size()) pivot = i;
    }
    const Complex& pw = children[pivot].weight.value();
    const Complex factor = norm * (pw / std::abs(pw));
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].is_zero()) continue;
      children[i].weight = i == pivot ? numbers_.lookup(std::abs(pw) / norm, 0.0)
                                      : numbers_.lookup(children[i].weight.value() / factor);
      if (children[i].is_zero()) children[i] = stub;
    }
    return numbers_.lookup(factor);
  }

  // Matrix: divide by the largest-magnitude successor, lowest index on ties.
  std::size_t pivot = children.size();
  double best = 0.0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].is_zero()) continue;
    const double mag = std::abs(children[i].weight.value());
    if (pivot == children.size() || mag > best + tol) {
      pivot = i;
      best = mag;
    }
  }
  const Complex factor = children[pivot].weight.value();
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].is_zero()) continue;
    if (i == pivot) {
      children[i].weight = numbers_.one();
      continue;
    }
    if (std::abs(children[i].weight.value()) / best <= 2.0 * tol) {
      children[i] = stub;
      continue;
    }
    children[i].weight = numbers_.lookup(children[i].weight.value() / factor);
    if (children[i].is_zero()) children[i] = stub;
  }
  return numbers_.lookup(factor);
}

bool Package::is_identity_pattern(const Node& n) const {
  if (n.kind != NodeKind::Matrix) return false;
  const auto d = reg_.dim(static_cast<std::size_t>(n.level));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const auto& e = n.children[r * d + c];
      if (r != c) {
        if (!e.is_zero()) return false;
        continue;
      }
      if (e.weight != numbers_.one() || !e.node->identity || e.node->level != n.level - 1) return false;
    }
  }
  return true;
}

Node* Package::acquire() {
  if (!free_.empty()) {
    Node* n = free_.back();
    free_.pop_back();
    return n;
  }
  return &pool_.emplace_back();
}

void Package::release(Node* n) {
  n->children.clear();
  n->ref = 0;
  n->identity = false;
  free_.push_back(n);
}

Edge Package::make_node(int level, NodeKind kind, std::vector<Edge> children) {
  if (level < 0 || static_cast<std::size_t>(level) >= reg_.size()) {
    throw StructuralError("node level " + std::to_string(level) + " outside register of " +
                          std::to_string(reg_.size()) + " qudits");
  }
  const auto expected = arity(level, kind);
  if (children.size() != expected) {
    throw StructuralError("node at level " + std::to_string(level) + " needs " + std::to_string(expected) +
                          " successors, got " + std::to_string(children.size()));
  }
  bool all_zero = true;
  for (auto& e : children) {
    if (e.node == nullptr) throw StructuralError("successor edge without target");
    if (e.is_zero()) {
      e = zero();
      continue;
    }
    if (e.node->level >= level) {
      throw StructuralError("successor at level " + std::to_string(e.node->level) +
                            " is not below node level " + std::to_string(level));
    }
    if (!e.node->is_terminal() && e.node->kind != kind) {
      throw StructuralError("successor kind differs from node kind");
    }
    all_zero = false;
  }
  if (all_zero) return zero();

  const auto factor = normalize(kind, children);

  Node* candidate = acquire();
  candidate->level = level;
  candidate->kind = kind;
  candidate->children = std::move(children);
  candidate->hash = hash_node(*candidate);

  if (const auto it = unique_.find(candidate); it != unique_.end()) {
    release(candidate);
    return Edge{*it, factor};
  }
  candidate->identity = is_identity_pattern(*candidate);
  unique_.insert(candidate);
  return Edge{candidate, factor};
}

void Package::inc_ref(const Edge& e) {
  if (e.is_terminal()) return;
  if (++e.node->ref == 1) {
    for (const auto& child : e.node->children) inc_ref(child);
  }
}

void Package::dec_ref(const Edge& e) {
  if (e.is_terminal()) return;
  if (e.node->ref == 0) {
    throw InternalError("reference count of node at level " + std::to_string(e.node->level) +
                        " would drop below zero");
  }
  if (--e.node->ref == 0) {
    for (const auto& child : e.node->children) dec_ref(child);
  }
}

std::size_t Package::collect() {
  caches_.clear();
  std::fill(identity_cache_.begin(), identity_cache_.end(), std::nullopt);
  std::size_t freed = 0;
  for (auto it = unique_.begin(); it != unique_.end();) {
    if ((*it)->ref == 0) {
      release(*it);
      it = unique_.erase(it);
      ++freed;
    } else {
      ++it;
    }
  }
  return freed;
}

bool Package::maybe_collect() {
  if (unique_.size() <= gc_limit_) return false;
  collect();
  // Avoid sweeping on every call when most nodes are live.
  if (unique_.size() > gc_limit_ / 2) gc_limit_ *= 2;
  return true;
}

Edge Package::identity(int upto_level) {
  if (upto_level < -1 || upto_level >= static_cast<int>(reg_.size())) {
    throw InputError("identity level " + std::to_string(upto_level) + " outside register");
  }
  if (upto_level == -1) return one();
  auto& slot = identity_cache_[static_cast<std::size_t>(upto_level)];
  if (slot) return *slot;

  const Edge below = identity(upto_level - 1);
  const auto d = reg_.dim(static_cast<std::size_t>(upto_level));
  std::vector<Edge> children(d * d, zero());
  for (std::size_t i = 0; i < d; ++i) children[i * d + i] = below;
  slot = make_node(upto_level, NodeKind::Matrix, std::move(children));
  return *slot;
}

namespace {

template <typename F>
void visit_reachable(const Edge& root, F&& on_node) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{root.node};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    on_node(*n);
    for (const auto& e : n->children) stack.push_back(e.node);
  }
}

}  // namespace

std::size_t node_count(const Edge& root) {
  std::size_t count = 0;
  visit_reachable(root, [&](const Node&) { ++count; });
  return count;
}

std::size_t distinct_count(const Edge& root) {
  std::unordered_set<const Complex*> weights{root.weight.id()};
  visit_reachable(root, [&](const Node& n) {
    for (const auto& e : n.children) weights.insert(e.weight.id());
  });
  return weights.size();
}

DDStats stats(const Edge& root) {
  DDStats s;
  std::unordered_set<const Complex*> weights{root.weight.id()};
  visit_reachable(root, [&](const Node& n) {
    ++s.node_count;
    s.max_arity = std::max(s.max_arity, n.children.size());
    for (const auto& e : n.children) weights.insert(e.weight.id());
  });
  s.distinct_complex = weights.size();
  return s;
}

AuditReport audit(const Package& pkg, const Edge& root, double norm_tolerance) {
  AuditReport report;
  const double tol = pkg.numbers().tolerance();
  visit_reachable(root, [&](const Node& n) {
    if (n.is_terminal()) return;
    ++report.nodes_checked;
    bool any_nonzero = false;
    double norm_sq = 0.0;
    double max_mag = 0.0;
    bool has_unit_pivot = false;
    for (const auto& e : n.children) {
      if (e.is_zero()) {
        if (!e.is_terminal()) ++report.zero_stub_violations;
        continue;
      }
      any_nonzero = true;
      if (e.node->level >= n.level) ++report.level_violations;
      norm_sq += std::norm(e.weight.value());
      max_mag = std::max(max_mag, std::abs(e.weight.value()));
      if (e.weight == pkg.numbers().one()) has_unit_pivot = true;
    }
    if (!any_nonzero) ++report.zero_stub_violations;
    if (n.kind == NodeKind::Vector) {
      if (std::abs(norm_sq - 1.0) > norm_tolerance) ++report.normalization_violations;
    } else if (!has_unit_pivot || max_mag > 1.0 + tol) {
      ++report.normalization_violations;
    }
  });
  return report;
}

AuditReport audit_unique_table(const Package& pkg) {
  AuditReport report;
  using Key = std::tuple<int, NodeKind, std::vector<std::pair<const void*, const void*>>>;
  std::map<Key, const Node*> seen;
  pkg.for_each_node([&](const Node& n) {
    ++report.nodes_checked;
    std::vector<std::pair<const void*, const void*>> succ;
    succ.reserve(n.children.size());
    for (const auto& e : n.children) succ.emplace_back(e.node, e.weight.id());
    if (!seen.emplace(Key{n.level, n.kind, std::move(succ)}, &n).second) ++report.duplicate_nodes;
  });
  return report;
}

}  // namespace mdd
