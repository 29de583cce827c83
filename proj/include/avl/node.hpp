#pragma once

#include <memory>
#include <utility>

#include "avl/types.hpp"

namespace avl {

/// Payload type for trees that carry keys only.
struct NoPayload {
  friend constexpr bool operator==(NoPayload, NoPayload) noexcept = default;
};

template <class Key, class Payload = NoPayload>
struct Node {
  Node(Key k, Payload p) : key(std::move(k)), payload(std::move(p)) {}

  Key key;
  [[no_unique_address]] Payload payload;
  BalanceFactor balance;
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

/// Deep copy of a subtree, balance factors included.
template <class Key, class Payload>
std::unique_ptr<Node<Key, Payload>> clone_subtree(const Node<Key, Payload>* node) {
  if (node == nullptr) return nullptr;
  auto copy = std::make_unique<Node<Key, Payload>>(node->key, node->payload);
  copy->balance = node->balance;
  copy->left = clone_subtree(node->left.get());
  copy->right = clone_subtree(node->right.get());
  return copy;
}

}  // namespace avl
