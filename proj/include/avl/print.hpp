#pragma once

#include <sstream>
#include <string>

#include "avl/node.hpp"

namespace avl {

namespace detail {

template <class Key, class Payload>
void print_subtree(std::ostream& out, const Node<Key, Payload>* node, int depth, const char* tag) {
  if (node == nullptr) return;
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << tag << node->key << " ["
      << (node->balance.value() > 0 ? "+" : "") << node->balance.value() << "]\n";
  print_subtree(out, node->left.get(), depth + 1, "L: ");
  print_subtree(out, node->right.get(), depth + 1, "R: ");
}

}  // namespace detail

/// Indented pre-order rendering, one node per line with its balance factor:
///
///     4 [-1]
///       L: 2 [0]
///       R: 5 [0]
template <class Tree>
std::string format_tree(const Tree& tree) {
  std::ostringstream out;
  if (tree.root() == nullptr) {
    out << "(empty)\n";
  } else {
    detail::print_subtree(out, tree.root(), 0, "");
  }
  return out.str();
}

}  // namespace avl
