#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "avl/avl_tree.hpp"

namespace avl {

/// Ordered key-value map over AvlTree. Values ride in the node payload, so a
/// two-child deletion moves key and value into the vacated slot together.
template <class Key, class Value, class Compare = std::less<Key>>
class AvlMap {
 public:
  using Tree = AvlTree<Key, Compare, Value>;

  AvlMap() = default;
  explicit AvlMap(Tree tree) : tree_(std::move(tree)) {}

  /// Maps key to value. Returns the displaced value when the key was present;
  /// in that case only the value changes and no rotation happens.
  std::optional<Value> insert(Key key, Value value) {
    if (Value* existing = tree_.find_payload(key)) {
      return std::exchange(*existing, std::move(value));
    }
    tree_.insert(std::move(key), std::move(value));
    return std::nullopt;
  }

  std::optional<Value> erase(const Key& key, ReplacementStrategy strategy = ReplacementStrategy::Optimum) {
    return tree_.erase(key, strategy).removed;
  }

  [[nodiscard]] std::optional<Value> get(const Key& key) const {
    const auto* node = tree_.find(key);
    if (node == nullptr) return std::nullopt;
    return node->payload;
  }

  [[nodiscard]] const Value* find(const Key& key) const {
    const auto* node = tree_.find(key);
    return node == nullptr ? nullptr : &node->payload;
  }

  [[nodiscard]] bool contains(const Key& key) const { return tree_.contains(key); }
  [[nodiscard]] std::size_t size() const noexcept { return tree_.size(); }
  [[nodiscard]] bool empty() const noexcept { return tree_.empty(); }
  void clear() noexcept { tree_.clear(); }

  template <class Visitor>
  void for_each(Visitor&& visitor) const {
    tree_.for_each(std::forward<Visitor>(visitor));
  }

  [[nodiscard]] const Tree& tree() const noexcept { return tree_; }
  Tree release_tree() && { return std::move(tree_); }

 private:
  Tree tree_;
};

}  // namespace avl
