#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "mdd/complex_table.hpp"
#include "mdd/compute_table.hpp"
#include "mdd/register.hpp"

namespace mdd {

enum class NodeKind : std::uint8_t { Vector, Matrix };

struct Node;

/// Weighted reference to a node. A weight of zero always targets the
/// terminal ("zero stub"); a root edge denotes a whole state or operator.
struct Edge {
  Node* node = nullptr;
  CanonicalComplex weight;

  [[nodiscard]] bool is_terminal() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return weight.value() == Complex{}; }
  [[nodiscard]] int level() const noexcept;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Decision node at one qudit level. Vector nodes have d successors, matrix
/// nodes d*d in row-major order. The terminal has level -1 and no successors.
struct Node {
  std::vector<Edge> children;
  int level = -1;
  NodeKind kind = NodeKind::Vector;
  bool identity = false;
  std::uint32_t ref = 0;
  std::size_t hash = 0;

  [[nodiscard]] bool is_terminal() const noexcept { return level < 0; }
};

inline bool Edge::is_terminal() const noexcept { return node->is_terminal(); }
inline int Edge::level() const noexcept { return node->level; }

struct PackageConfig {
  double tolerance = kDefaultTolerance;
  bool caching = true;
  /// Unique-table size that makes maybe_collect() sweep unreferenced nodes.
  std::size_t gc_threshold = std::size_t{1} << 17;
};

/// Node-visit counters used to check complexity claims.
struct OpCounters {
  std::size_t kron_expansions = 0;
  std::size_t multiply_expansions = 0;
  std::size_t add_expansions = 0;
  std::size_t inner_expansions = 0;
};

struct NodePairKey {
  const Node* a;
  const Node* b;
  friend bool operator==(const NodePairKey&, const NodePairKey&) = default;
};

struct WeightedPairKey {
  const Node* a;
  const Complex* wa;
  const Node* b;
  const Complex* wb;
  friend bool operator==(const WeightedPairKey&, const WeightedPairKey&) = default;
};

struct NodePairKeyHash {
  std::size_t operator()(const NodePairKey& k) const noexcept {
    return hash_combine(std::hash<const void*>{}(k.a), std::hash<const void*>{}(k.b));
  }
};

struct WeightedPairKeyHash {
  std::size_t operator()(const WeightedPairKey& k) const noexcept {
    std::size_t h = std::hash<const void*>{}(k.a);
    h = hash_combine(h, std::hash<const void*>{}(k.wa));
    h = hash_combine(h, std::hash<const void*>{}(k.b));
    return hash_combine(h, std::hash<const void*>{}(k.wb));
  }
};

struct ComputeTables {
  ComputeTable<NodePairKey, Edge, NodePairKeyHash> kron;
  ComputeTable<NodePairKey, Edge, NodePairKeyHash> multiply;
  ComputeTable<WeightedPairKey, Edge, WeightedPairKeyHash> add;
  ComputeTable<NodePairKey, Complex, NodePairKeyHash> inner;

  void clear() noexcept {
    kron.clear();
    multiply.clear();
    add.clear();
    inner.clear();
  }
};

/// Owns every table of one simulation: complex numbers, unique nodes,
/// compute caches and the identity cache. Not copyable or movable since
/// edges point into it; use one package per thread.
class Package {
 public:
  explicit Package(QuditRegister reg, PackageConfig config = {});

  Package(const Package&) = delete;
  Package& operator=(const Package&) = delete;
  Package(Package&&) = delete;
  Package& operator=(Package&&) = delete;

  [[nodiscard]] const QuditRegister& reg() const noexcept { return reg_; }
  [[nodiscard]] const PackageConfig& config() const noexcept { return config_; }
  [[nodiscard]] ComplexTable& numbers() noexcept { return numbers_; }
  [[nodiscard]] const ComplexTable& numbers() const noexcept { return numbers_; }

  [[nodiscard]] Edge zero() const noexcept { return Edge{terminal_ptr(), numbers_.zero()}; }
  [[nodiscard]] Edge one() const noexcept { return Edge{terminal_ptr(), numbers_.one()}; }
  [[nodiscard]] Edge scalar(CanonicalComplex w) const noexcept { return Edge{terminal_ptr(), w}; }
  Edge scalar(const Complex& w) { return scalar(numbers_.lookup(w)); }

  /// Edge to the same node with weight multiplied by `factor`.
  Edge scale(const Edge& e, CanonicalComplex factor);

  /// Normalizes the successors, hash-conses the node and returns the
  /// factored-out constant as the edge weight. All-zero successors give the
  /// zero stub. Throws StructuralError on arity, kind or level violations.
  Edge make_node(int level, NodeKind kind, std::vector<Edge> children);

  void inc_ref(const Edge& e);
  /// Throws InternalError when the count would drop below zero.
  void dec_ref(const Edge& e);

  /// Clears compute and identity caches, then frees every node whose
  /// reference count is zero. Returns the number of freed nodes.
  std::size_t collect();
  /// Collects only when the unique table exceeds the configured threshold.
  bool maybe_collect();

  /// Identity matrix DD over lines 0..upto_level; upto_level == -1 gives the
  /// scalar one. Cached between collections.
  Edge identity(int upto_level);

  [[nodiscard]] std::size_t unique_table_size() const noexcept { return unique_.size(); }

  template <typename F>
  void for_each_node(F&& f) const {
    for (const Node* n : unique_) f(*n);
  }

  [[nodiscard]] ComputeTables& caches() noexcept { return caches_; }
  [[nodiscard]] OpCounters& counters() noexcept { return counters_; }
  [[nodiscard]] const OpCounters& counters() const noexcept { return counters_; }

  [[nodiscard]] std::size_t arity(int level, NodeKind kind) const;

 private:
  struct NodeHash {
    std::size_t operator()(const Node* n) const noexcept { return n->hash; }
  };
  struct NodeEqual {
    bool operator()(const Node* a, const Node* b) const noexcept {
      return a->level == b->level && a->kind == b->kind && a->children == b->children;
    }
  };

  [[nodiscard]] Node* terminal_ptr() const noexcept { return const_cast<Node*>(&terminal_); }
  CanonicalComplex normalize(NodeKind kind, std::vector<Edge>& children);
  Node* acquire();
  void release(Node* n);
  [[nodiscard]] bool is_identity_pattern(const Node& n) const;

  QuditRegister reg_;
  PackageConfig config_;
  ComplexTable numbers_;
  Node terminal_;
  std::deque<Node> pool_;
  std::vector<Node*> free_;
  std::unordered_set<Node*, NodeHash, NodeEqual> unique_;
  std::vector<std::optional<Edge>> identity_cache_;
  ComputeTables caches_;
  OpCounters counters_;
  std::size_t gc_limit_;
};

/// Structural statistics of the DD below a root edge.
struct DDStats {
  std::size_t node_count = 0;
  std::size_t distinct_complex = 0;
  std::size_t max_arity = 0;
};

/// Distinct reachable nodes, the terminal included.
[[nodiscard]] std::size_t node_count(const Edge& root);
/// Distinct canonical weights on reachable edges, root weight included.
[[nodiscard]] std::size_t distinct_count(const Edge& root);
[[nodiscard]] DDStats stats(const Edge& root);

/// Result of an invariant scan; every list empty means the DD is healthy.
struct AuditReport {
  std::size_t nodes_checked = 0;
  std::size_t normalization_violations = 0;
  std::size_t zero_stub_violations = 0;
  std::size_t level_violations = 0;
  std::size_t duplicate_nodes = 0;

  [[nodiscard]] bool ok() const noexcept {
    return normalization_violations == 0 && zero_stub_violations == 0 && level_violations == 0 &&
           duplicate_nodes == 0;
  }
};

/// Checks normalization, the zero-stub law and level monotonicity on every
/// node reachable from `root`.
[[nodiscard]] AuditReport audit(const Package& pkg, const Edge& root, double norm_tolerance = 1e-10);
/// Scans the whole unique table for duplicate (level, kind, successors) tuples.
[[nodiscard]] AuditReport audit_unique_table(const Package& pkg);

}  // namespace mdd
