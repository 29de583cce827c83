#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "avl/node.hpp"
#include "avl/rotation.hpp"
#include "avl/types.hpp"

namespace avl {

/// Chooses the subtree that supplies the replacement for a deleted node with
/// two children. Optimum follows the taller subtree and takes the left one when
/// both subtrees have equal height.
template <class Key, class Payload>
Direction select_replacement(const Node<Key, Payload>& node, ReplacementStrategy strategy) {
  if (!node.left || !node.right) {
    throw PreconditionError("select_replacement: node must have two children");
  }
  switch (strategy) {
    case ReplacementStrategy::RightmostOfLeft: return Direction::Left;
    case ReplacementStrategy::LeftmostOfRight: return Direction::Right;
    case ReplacementStrategy::Optimum:
      return node.balance.value() > 0 ? Direction::Right : Direction::Left;
  }
  return Direction::Left;
}

/// Rotation observer that ignores every event.
struct NoObserver {
  template <class NodeType>
  void operator()(const RotationEvent&, const NodeType&) const noexcept {}
};

/// AVL tree with unique keys and an optional per-key payload.
///
/// Each node stores only its balance factor; heights are never materialized.
/// Insertion performs at most one (single or double) rotation. Deletion retraces
/// from the physically removed node toward the root and may rotate at every
/// level. Rotations are reported both in the returned result and, after each
/// one, to an optional observer that receives the new subtree root.
///
/// Not thread-safe for concurrent mutation.
template <class Key, class Compare = std::less<Key>, class Payload = NoPayload>
class AvlTree {
 public:
  using key_type = Key;
  using payload_type = Payload;
  using NodeType = Node<Key, Payload>;
  using Link = std::unique_ptr<NodeType>;

  struct InsertResult {
    bool inserted = false;
    std::vector<RotationEvent> rotations;
  };

  struct EraseResult {
    bool erased = false;
    std::vector<RotationEvent> rotations;
    // Set only when the erased node had two children.
    std::optional<Direction> replacement;
    std::optional<Payload> removed;
  };

  AvlTree() = default;
  explicit AvlTree(Compare compare) : compare_(std::move(compare)) {}

  AvlTree(const AvlTree& other)
      : root_(clone_subtree(other.root_.get())), size_(other.size_), compare_(other.compare_) {}
  AvlTree& operator=(const AvlTree& other) {
    if (this != &other) *this = AvlTree(other);
    return *this;
  }
  AvlTree(AvlTree&& other) noexcept
      : root_(std::move(other.root_)), size_(std::exchange(other.size_, 0)), compare_(std::move(other.compare_)) {}
  AvlTree& operator=(AvlTree&& other) noexcept {
    root_ = std::move(other.root_);
    size_ = std::exchange(other.size_, 0);
    compare_ = std::move(other.compare_);
    return *this;
  }
  ~AvlTree() = default;

  /// Wraps an externally built node structure. No invariant is checked; run
  /// validate() on the result when the structure is not known to be sound.
  static AvlTree adopt(Link root, std::size_t size, Compare compare = Compare{}) {
    AvlTree tree(std::move(compare));
    tree.root_ = std::move(root);
    tree.size_ = size;
    return tree;
  }

  /// Detaches the node structure, leaving the tree empty.
  Link release() noexcept {
    size_ = 0;
    return std::move(root_);
  }

  [[nodiscard]] const NodeType* root() const noexcept { return root_.get(); }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
  [[nodiscard]] const Compare& compare() const noexcept { return compare_; }

  /// Height in nodes (empty tree = 0), read off the balance factors by
  /// following the taller side. Trusts the stored balances.
  [[nodiscard]] int height() const noexcept {
    int height = 0;
    for (const NodeType* node = root_.get(); node != nullptr;
         node = node->balance.value() < 0 ? node->left.get() : node->right.get()) {
      ++height;
    }
    return height;
  }

  void clear() noexcept {
    root_.reset();
    size_ = 0;
  }

  template <class Observer = NoObserver>
  InsertResult insert(Key key, Payload payload = Payload{}, Observer&& observer = Observer{}) {
    InsertResult result;
    Context<Observer> context{&result.rotations, Phase::Insert, ReplacementStrategy::Optimum, observer};
    insert_at(root_, key, payload, result.inserted, context);
    if (result.inserted) ++size_;
    return result;
  }

  template <class Observer = NoObserver>
  EraseResult erase(const Key& key, ReplacementStrategy strategy, Observer&& observer = Observer{}) {
    EraseResult result;
    Context<Observer> context{&result.rotations, Phase::Delete, strategy, observer};
    erase_at(root_, key, result, context);
    if (result.erased) --size_;
    return result;
  }

  [[nodiscard]] const NodeType* find(const Key& key) const {
    const NodeType* node = root_.get();
    while (node != nullptr) {
      if (compare_(key, node->key)) {
        node = node->left.get();
      } else if (compare_(node->key, key)) {
        node = node->right.get();
      } else {
        return node;
      }
    }
    return nullptr;
  }

  [[nodiscard]] bool contains(const Key& key) const { return find(key) != nullptr; }

  [[nodiscard]] Payload* find_payload(const Key& key) {
    const NodeType* node = find(key);
    return node == nullptr ? nullptr : &const_cast<NodeType*>(node)->payload;
  }

  /// Visits (key, payload) pairs in ascending key order.
  template <class Visitor>
  void for_each(Visitor&& visitor) const {
    visit_in_order(root_.get(), visitor);
  }

  [[nodiscard]] std::vector<Key> in_order() const {
    std::vector<Key> keys;
    keys.reserve(size_);
    for_each([&keys](const Key& key, const Payload&) { keys.push_back(key); });
    return keys;
  }

 private:
  template <class Observer>
  struct Context {
    std::vector<RotationEvent>* rotations;
    Phase phase;
    ReplacementStrategy strategy;
    Observer& observer;
  };

  template <class Visitor>
  static void visit_in_order(const NodeType* node, Visitor& visitor) {
    if (node == nullptr) return;
    visit_in_order(node->left.get(), visitor);
    visitor(node->key, node->payload);
    visit_in_order(node->right.get(), visitor);
  }

  template <class Observer>
  static void rotate(Link& link, RotationKind kind, Context<Observer>& context) {
    switch (kind) {
      case RotationKind::LL: rotate_ll(link); break;
      case RotationKind::LR: rotate_lr(link); break;
      case RotationKind::RL: rotate_rl(link); break;
      case RotationKind::RR: rotate_rr(link); break;
    }
    const RotationEvent event{kind, context.phase};
    context.rotations->push_back(event);
    context.observer(event, *link);
  }

  // Returns true when the subtree under `link` grew taller.
  template <class Observer>
  bool insert_at(Link& link, Key& key, Payload& payload, bool& inserted, Context<Observer>& context) {
    if (!link) {
      link = std::make_unique<NodeType>(std::move(key), std::move(payload));
      inserted = true;
      return true;
    }
    if (compare_(key, link->key)) {
      return insert_at(link->left, key, payload, inserted, context) && left_grew(link, context);
    }
    if (compare_(link->key, key)) {
      return insert_at(link->right, key, payload, inserted, context) && right_grew(link, context);
    }
    return false;
  }

  template <class Observer>
  static bool left_grew(Link& link, Context<Observer>& context) {
    switch (link->balance.value()) {
      case +1: link->balance = BalanceFactor::even(); return false;
      case 0: link->balance = BalanceFactor::left_heavy(); return true;
      default: break;
    }
    link->balance = BalanceFactor(-2);
    const bool single = link->left->balance.value() < 0;
    rotate(link, single ? RotationKind::LL : RotationKind::LR, context);
    return false;
  }

  template <class Observer>
  static bool right_grew(Link& link, Context<Observer>& context) {
    switch (link->balance.value()) {
      case -1: link->balance = BalanceFactor::even(); return false;
      case 0: link->balance = BalanceFactor::right_heavy(); return true;
      default: break;
    }
    link->balance = BalanceFactor(+2);
    const bool single = link->right->balance.value() > 0;
    rotate(link, single ? RotationKind::RR : RotationKind::RL, context);
    return false;
  }

  // The left subtree lost one level. Returns true when `link`'s subtree did too.
  template <class Observer>
  static bool left_shrunk(Link& link, Context<Observer>& context) {
    switch (link->balance.value()) {
      case -1: link->balance = BalanceFactor::even(); return true;
      case 0: link->balance = BalanceFactor::right_heavy(); return false;
      default: break;
    }
    link->balance = BalanceFactor(+2);
    const int child = link->right->balance.value();
    if (child >= 0) {
      rotate(link, RotationKind::RR, context);
      return child != 0;
    }
    rotate(link, RotationKind::RL, context);
    return true;
  }

  template <class Observer>
  static bool right_shrunk(Link& link, Context<Observer>& context) {
    switch (link->balance.value()) {
      case +1: link->balance = BalanceFactor::even(); return true;
      case 0: link->balance = BalanceFactor::left_heavy(); return false;
      default: break;
    }
    link->balance = BalanceFactor(-2);
    const int child = link->left->balance.value();
    if (child <= 0) {
      rotate(link, RotationKind::LL, context);
      return child != 0;
    }
    rotate(link, RotationKind::LR, context);
    return true;
  }

  // Unlinks the rightmost node under `link`, moving its entry into the slot.
  template <class Observer>
  static bool extract_rightmost(Link& link, NodeType& slot, Context<Observer>& context) {
    if (link->right) {
      return extract_rightmost(link->right, slot, context) && right_shrunk(link, context);
    }
    slot.key = std::move(link->key);
    slot.payload = std::move(link->payload);
    Link orphan = std::move(link->left);
    link = std::move(orphan);
    return true;
  }

  template <class Observer>
  static bool extract_leftmost(Link& link, NodeType& slot, Context<Observer>& context) {
    if (link->left) {
      return extract_leftmost(link->left, slot, context) && left_shrunk(link, context);
    }
    slot.key = std::move(link->key);
    slot.payload = std::move(link->payload);
    Link orphan = std::move(link->right);
    link = std::move(orphan);
    return true;
  }

  // Returns true when the subtree under `link` became shorter.
  template <class Observer>
  bool erase_at(Link& link, const Key& key, EraseResult& result, Context<Observer>& context) {
    if (!link) return false;
    if (compare_(key, link->key)) {
      return erase_at(link->left, key, result, context) && left_shrunk(link, context);
    }
    if (compare_(link->key, key)) {
      return erase_at(link->right, key, result, context) && right_shrunk(link, context);
    }

    result.erased = true;
    NodeType& target = *link;
    result.removed.emplace(std::move(target.payload));
    if (!target.left || !target.right) {
      Link orphan = target.left ? std::move(target.left) : std::move(target.right);
      link = std::move(orphan);
      return true;
    }

    const Direction direction = select_replacement(target, context.strategy);
    result.replacement = direction;
    if (direction == Direction::Left) {
      return extract_rightmost(target.left, target, context) && left_shrunk(link, context);
    }
    return extract_leftmost(target.right, target, context) && right_shrunk(link, context);
  }

  Link root_;
  std::size_t size_ = 0;
  [[no_unique_address]] Compare compare_;
};

}  // namespace avl
