#pragma once

// The four AVL rotations, applied in place to the link that owns the
// imbalanced subtree. After the call the link holds the new subtree root.
//
// Single rotations update the two exchanged balance factors from their prior
// values (valid for any prior balances, so they also compose into the double
// rotations). Double rotations use the fixed grandchild case table and require
// the rebalancing state that selects them.

#include <algorithm>
#include <memory>

#include "avl/node.hpp"
#include "avl/types.hpp"

namespace avl {

/// Promotes the left child. Selected for a -2 node whose left child is -1 or 0.
template <class Key, class Payload>
void rotate_ll(std::unique_ptr<Node<Key, Payload>>& link) {
  if (!link || !link->left) throw StructuralError("rotate_ll: missing left child");
  auto child = std::move(link->left);
  const int parent_before = link->balance.value();
  const int child_before = child->balance.value();
  const int parent_after = parent_before + 1 - std::min(child_before, 0);
  const int child_after = child_before + 1 + std::max(parent_after, 0);
  link->left = std::move(child->right);
  link->balance = BalanceFactor(parent_after);
  child->balance = BalanceFactor(child_after);
  child->right = std::move(link);
  link = std::move(child);
}

/// Promotes the right child. Mirror image of rotate_ll.
template <class Key, class Payload>
void rotate_rr(std::unique_ptr<Node<Key, Payload>>& link) {
  if (!link || !link->right) throw StructuralError("rotate_rr: missing right child");
  auto child = std::move(link->right);
  const int parent_before = link->balance.value();
  const int child_before = child->balance.value();
  const int parent_after = parent_before - 1 - std::max(child_before, 0);
  const int child_after = child_before - 1 + std::min(parent_after, 0);
  link->right = std::move(child->left);
  link->balance = BalanceFactor(parent_after);
  child->balance = BalanceFactor(child_after);
  child->left = std::move(link);
  link = std::move(child);
}

namespace detail {

// Balances of the two demoted nodes after a double rotation, keyed on the
// grandchild's prior balance. The promoted grandchild always ends at 0.
struct DoubleRotationBalances {
  int left;
  int right;
};

constexpr DoubleRotationBalances double_rotation_table(int grandchild) noexcept {
  switch (grandchild) {
    case -1: return {0, +1};
    case +1: return {-1, 0};
    default: return {0, 0};
  }
}

}  // namespace detail

/// Promotes the left child's right child over both. Requires a -2 node whose
/// left child is +1.
template <class Key, class Payload>
void rotate_lr(std::unique_ptr<Node<Key, Payload>>& link) {
  if (!link || !link->left || !link->left->right) {
    throw StructuralError("rotate_lr: missing left-right grandchild");
  }
  if (link->balance.value() != -2 || link->left->balance.value() != +1) {
    throw StructuralError("rotate_lr: balances do not select a left-right rotation");
  }
  auto child = std::move(link->left);
  auto grandchild = std::move(child->right);
  const auto after = detail::double_rotation_table(grandchild->balance.value());

  child->right = std::move(grandchild->left);
  link->left = std::move(grandchild->right);
  child->balance = BalanceFactor(after.left);
  link->balance = BalanceFactor(after.right);
  grandchild->balance = BalanceFactor::even();
  grandchild->left = std::move(child);
  grandchild->right = std::move(link);
  link = std::move(grandchild);
}

/// Promotes the right child's left child over both. Mirror image of rotate_lr.
template <class Key, class Payload>
void rotate_rl(std::unique_ptr<Node<Key, Payload>>& link) {
  if (!link || !link->right || !link->right->left) {
    throw StructuralError("rotate_rl: missing right-left grandchild");
  }
  if (link->balance.value() != +2 || link->right->balance.value() != -1) {
    throw StructuralError("rotate_rl: balances do not select a right-left rotation");
  }
  auto child = std::move(link->right);
  auto grandchild = std::move(child->left);
  const auto after = detail::double_rotation_table(grandchild->balance.value());

  child->left = std::move(grandchild->right);
  link->right = std::move(grandchild->left);
  link->balance = BalanceFactor(after.left);
  child->balance = BalanceFactor(after.right);
  grandchild->balance = BalanceFactor::even();
  grandchild->left = std::move(link);
  grandchild->right = std::move(child);
  link = std::move(grandchild);
}

}  // namespace avl
