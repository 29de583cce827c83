#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "avl/node.hpp"

namespace avl {

enum class ViolationKind {
  Ordering,         // key out of order relative to an ancestor
  Imbalance,        // recomputed subtree heights differ by more than one
  BalanceMismatch,  // stored balance differs from recomputed height difference
  SizeMismatch,     // recorded size differs from reachable node count
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t node_count = 0;
  int height = 0;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }

  [[nodiscard]] std::size_t count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
  }
};

namespace detail {

template <class Key>
std::string describe_key(const Key& key) {
  if constexpr (requires(std::ostream& os, const Key& k) { os << k; }) {
    std::ostringstream out;
    out << key;
    return out.str();
  } else {
    return "<key>";
  }
}

template <class Key, class Payload, class Compare>
class Validator {
 public:
  using NodeType = Node<Key, Payload>;

  Validator(const Compare& compare, ValidationReport& report) : compare_(compare), report_(report) {}

  // Returns the recomputed height of the subtree. `low`/`high` are the
  // nearest ancestors bounding the subtree's keys, if any.
  int walk(const NodeType* node, const Key* low, const Key* high) {
    if (node == nullptr) return 0;
    ++report_.node_count;
    if ((low != nullptr && !compare_(*low, node->key)) || (high != nullptr && !compare_(node->key, *high))) {
      add(ViolationKind::Ordering, node, "key outside the range set by its ancestors");
    }
    const int left = walk(node->left.get(), low, &node->key);
    const int right = walk(node->right.get(), &node->key, high);
    const int difference = right - left;
    if (difference < -1 || difference > 1) {
      add(ViolationKind::Imbalance, node, "subtree heights differ by " + std::to_string(difference));
    }
    if (difference != node->balance.value()) {
      add(ViolationKind::BalanceMismatch, node,
          "stored balance " + std::to_string(node->balance.value()) + ", recomputed " + std::to_string(difference));
    }
    return 1 + std::max(left, right);
  }

 private:
  void add(ViolationKind kind, const NodeType* node, const std::string& what) {
    report_.violations.push_back({kind, "node " + describe_key(node->key) + ": " + what});
  }

  const Compare& compare_;
  ValidationReport& report_;
};

}  // namespace detail

/// Checks BST ordering, the AVL height condition, stored-versus-recomputed
/// balance factors, and the recorded size. Never mutates the tree.
template <class Tree>
ValidationReport validate(const Tree& tree) {
  ValidationReport report;
  using Key = typename Tree::key_type;
  detail::Validator<Key, typename Tree::payload_type, std::decay_t<decltype(tree.compare())>> validator(
      tree.compare(), report);
  report.height = validator.walk(tree.root(), nullptr, nullptr);
  if (report.node_count != tree.size()) {
    report.violations.push_back({ViolationKind::SizeMismatch, "recorded size " + std::to_string(tree.size()) +
                                                                  ", reachable nodes " +
                                                                  std::to_string(report.node_count)});
  }
  return report;
}

}  // namespace avl
