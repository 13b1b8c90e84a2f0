#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>

namespace mdd {

/// Memoization map for DD operations. Keys hold node and weight identities
/// only, so entries stay valid until the owning package collects garbage.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ComputeTable {
 public:
  [[nodiscard]] std::optional<Value> find(const Key& key) {
    const auto it = map_.find(key);
    if (it == map_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void insert(const Key& key, const Value& value) { map_.insert_or_assign(key, value); }
  void clear() noexcept { map_.clear(); }

  [[nodiscard]] std::size_t size() const noexcept { return map_.size(); }
  [[nodiscard]] std::size_t hits() const noexcept { return hits_; }
  [[nodiscard]] std::size_t misses() const noexcept { return misses_; }

 private:
  std::unordered_map<Key, Value, Hash> map_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace mdd
