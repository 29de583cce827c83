#pragma once

// Brute-force helpers for tests. These recompute everything from the links and
// never read the library's own validation or height code.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "avl/node.hpp"

namespace avl::testing {

template <class Key, class Payload>
int brute_height(const Node<Key, Payload>* node) {
  if (node == nullptr) return 0;
  return 1 + std::max(brute_height(node->left.get()), brute_height(node->right.get()));
}

/// True when every stored balance in the subtree equals the recomputed
/// right-minus-left height difference.
template <class Key, class Payload>
bool balances_match_heights(const Node<Key, Payload>* node) {
  if (node == nullptr) return true;
  const int difference = brute_height(node->right.get()) - brute_height(node->left.get());
  return node->balance.value() == difference && balances_match_heights(node->left.get()) &&
         balances_match_heights(node->right.get());
}

template <class Key, class Payload>
void collect_keys(const Node<Key, Payload>* node, std::vector<Key>& out) {
  if (node == nullptr) return;
  collect_keys(node->left.get(), out);
  out.push_back(node->key);
  collect_keys(node->right.get(), out);
}

/// Parenthesized shape such as "2(1,3)" or "3(2(1,.),.)"; leaves print bare.
template <class Key, class Payload>
std::string shape(const Node<Key, Payload>* node) {
  if (node == nullptr) return ".";
  std::string out = std::to_string(node->key);
  if (node->left || node->right) out += "(" + shape(node->left.get()) + "," + shape(node->right.get()) + ")";
  return out;
}

using IntNode = Node<int, NoPayload>;
using IntLink = std::unique_ptr<IntNode>;

inline IntLink leaf(int key, int balance = 0) {
  auto node = std::make_unique<IntNode>(key, NoPayload{});
  node->balance = BalanceFactor(balance);
  return node;
}

inline IntLink join(int key, int balance, IntLink left, IntLink right) {
  auto node = leaf(key, balance);
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

/// Mirror image with keys negated and balances flipped.
inline IntLink reflect(const IntNode* node) {
  if (node == nullptr) return nullptr;
  return join(-node->key, -node->balance.value(), reflect(node->right.get()), reflect(node->left.get()));
}

}  // namespace avl::testing
