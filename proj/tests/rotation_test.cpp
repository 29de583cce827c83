#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "avl/avl_tree.hpp"
#include "avl/rotation.hpp"
#include "tree_oracle.hpp"

namespace avl {
namespace {

using testing::balances_match_heights;
using testing::IntLink;
using testing::join;
using testing::leaf;
using testing::reflect;
using testing::shape;

TEST(RotateLL, LeftLeftChainBecomesBalancedTriple) {
  IntLink t = join(3, -2, join(2, -1, leaf(1), nullptr), nullptr);
  rotate_ll(t);
  EXPECT_EQ(shape(t.get()), "2(1,3)");
  EXPECT_TRUE(balances_match_heights(t.get()));
  EXPECT_EQ(t->balance.value(), 0);
  EXPECT_EQ(t->right->balance.value(), 0);
}

TEST(RotateLL, EvenChildLeavesHeightUnchanged) {
  // Arises only during deletion: the left child is even.
  IntLink t = join(5, -2, join(3, 0, leaf(2), leaf(4)), nullptr);
  rotate_ll(t);
  EXPECT_EQ(shape(t.get()), "3(2,5(4,.))");
  EXPECT_TRUE(balances_match_heights(t.get()));
  EXPECT_EQ(t->balance.value(), +1);
  EXPECT_EQ(t->right->balance.value(), -1);
  EXPECT_EQ(testing::brute_height(t.get()), 3);
}

TEST(RotateLL, MissingLeftChildIsStructuralError) {
  IntLink t = leaf(1);
  EXPECT_THROW(rotate_ll(t), StructuralError);
  IntLink empty;
  EXPECT_THROW(rotate_ll(empty), StructuralError);
}

TEST(RotateLL, TwoNodeSubtreeNeverRotatesOnInsert) {
  AvlTree<int> tree;
  tree.insert(2);
  const auto result = tree.insert(1);
  EXPECT_TRUE(result.rotations.empty());
  EXPECT_EQ(tree.root()->balance.value(), -1);
}

TEST(RotateRR, RightRightChainBecomesBalancedTriple) {
  IntLink t = join(1, +2, nullptr, join(2, +1, nullptr, leaf(3)));
  rotate_rr(t);
  EXPECT_EQ(shape(t.get()), "2(1,3)");
  EXPECT_TRUE(balances_match_heights(t.get()));
}

TEST(RotateRR, MissingRightChildIsStructuralError) {
  IntLink t = leaf(1);
  EXPECT_THROW(rotate_rr(t), StructuralError);
}

TEST(RotateRR, MirrorsRotateLL) {
  std::vector<IntLink> cases;
  cases.push_back(join(3, -2, join(2, -1, leaf(1), nullptr), nullptr));
  cases.push_back(join(5, -2, join(3, 0, leaf(2), leaf(4)), nullptr));
  cases.push_back(join(6, -2, join(4, -1, join(2, 0, leaf(1), leaf(3)), leaf(5)), leaf(7)));
  for (auto& original : cases) {
    IntLink mirrored = reflect(original.get());
    rotate_ll(original);
    rotate_rr(mirrored);
    IntLink expected = reflect(original.get());
    EXPECT_EQ(shape(mirrored.get()), shape(expected.get()));
    EXPECT_TRUE(balances_match_heights(mirrored.get()));
  }
}

TEST(RotateLR, ZigZagBecomesBalancedTriple) {
  IntLink t = join(3, -2, join(1, +1, nullptr, leaf(2)), nullptr);
  rotate_lr(t);
  EXPECT_EQ(shape(t.get()), "2(1,3)");
  EXPECT_TRUE(balances_match_heights(t.get()));
}

TEST(RotateLR, GrandchildLeftHeavy) {
  // 5 is -2, 2 is +1, grandchild 4 carries a left subtree.
  IntLink t = join(5, -2, join(2, +1, leaf(1), join(4, -1, leaf(3), nullptr)), leaf(6));
  ASSERT_TRUE(balances_match_heights(t->left.get()));
  rotate_lr(t);
  EXPECT_EQ(shape(t.get()), "4(2(1,3),5(.,6))");
  EXPECT_EQ(t->balance.value(), 0);
  EXPECT_EQ(t->left->balance.value(), 0);
  EXPECT_EQ(t->right->balance.value(), +1);
  EXPECT_TRUE(balances_match_heights(t.get()));
}

TEST(RotateLR, GrandchildRightHeavy) {
  IntLink t = join(5, -2, join(2, +1, leaf(1), join(3, +1, nullptr, leaf(4))), leaf(6));
  ASSERT_TRUE(balances_match_heights(t->left.get()));
  rotate_lr(t);
  EXPECT_EQ(shape(t.get()), "3(2(1,.),5(4,6))");
  EXPECT_EQ(t->balance.value(), 0);
  EXPECT_EQ(t->left->balance.value(), -1);
  EXPECT_EQ(t->right->balance.value(), 0);
  EXPECT_TRUE(balances_match_heights(t.get()));
}

TEST(RotateLR, RejectsMissingLinksAndWrongBalances) {
  IntLink no_grandchild = join(3, -2, join(2, -1, leaf(1), nullptr), nullptr);
  EXPECT_THROW(rotate_lr(no_grandchild), StructuralError);
  IntLink wrong = join(3, -1, join(1, +1, nullptr, leaf(2)), nullptr);
  EXPECT_THROW(rotate_lr(wrong), StructuralError);
}

TEST(RotateRL, ZigZagBecomesBalancedTriple) {
  IntLink t = join(1, +2, nullptr, join(3, -1, leaf(2), nullptr));
  rotate_rl(t);
  EXPECT_EQ(shape(t.get()), "2(1,3)");
  EXPECT_TRUE(balances_match_heights(t.get()));
}

TEST(RotateRL, MirrorsRotateLR) {
  std::vector<IntLink> cases;
  cases.push_back(join(3, -2, join(1, +1, nullptr, leaf(2)), nullptr));
  cases.push_back(join(5, -2, join(2, +1, leaf(1), join(4, -1, leaf(3), nullptr)), leaf(6)));
  cases.push_back(join(5, -2, join(2, +1, leaf(1), join(3, +1, nullptr, leaf(4))), leaf(6)));
  for (auto& original : cases) {
    IntLink mirrored = reflect(original.get());
    rotate_lr(original);
    rotate_rl(mirrored);
    IntLink expected = reflect(original.get());
    EXPECT_EQ(shape(mirrored.get()), shape(expected.get()));
    EXPECT_TRUE(balances_match_heights(mirrored.get()));
  }
}

TEST(RotateRL, MissingGrandchildIsStructuralError) {
  IntLink t = join(1, +2, nullptr, join(2, +1, nullptr, leaf(3)));
  EXPECT_THROW(rotate_rl(t), StructuralError);
}

// Every binary search tree shape over keys [low, high], balances set from
// recomputed heights.
std::vector<IntLink> all_shapes(int low, int high) {
  std::vector<IntLink> shapes;
  if (low > high) {
    shapes.push_back(nullptr);
    return shapes;
  }
  for (int root = low; root <= high; ++root) {
    auto lefts = all_shapes(low, root - 1);
    auto rights = all_shapes(root + 1, high);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        const int balance = testing::brute_height(r.get()) - testing::brute_height(l.get());
        shapes.push_back(join(root, balance, clone_subtree(l.get()), clone_subtree(r.get())));
      }
    }
  }
  return shapes;
}

TEST(RotateLR, EqualsRightRotationOfChildThenLeftRotationOfRoot) {
  ASSERT_EQ(all_shapes(1, 5).size(), 42u);
  // No 5-node shape has a -2 root over a +1 left child, so sizes 3..7 are used.
  int checked = 0;
  std::vector<IntLink> shapes;
  for (int n = 3; n <= 7; ++n) {
    for (auto& s : all_shapes(1, n)) shapes.push_back(std::move(s));
  }
  for (const auto& candidate : shapes) {
    if (!candidate->left || !candidate->left->right) continue;
    if (candidate->balance.value() != -2 || candidate->left->balance.value() != +1) continue;

    IntLink direct = clone_subtree(candidate.get());
    rotate_lr(direct);

    IntLink composed = clone_subtree(candidate.get());
    rotate_rr(composed->left);
    rotate_ll(composed);

    EXPECT_EQ(shape(direct.get()), shape(composed.get())) << "from " << shape(candidate.get());
    EXPECT_TRUE(balances_match_heights(direct.get())) << "from " << shape(candidate.get());
    EXPECT_TRUE(balances_match_heights(composed.get())) << "from " << shape(candidate.get());
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(RotateRL, EqualsLeftRotationOfChildThenRightRotationOfRoot) {
  std::vector<IntLink> shapes;
  for (int n = 3; n <= 7; ++n) {
    for (auto& s : all_shapes(1, n)) shapes.push_back(std::move(s));
  }
  int checked = 0;
  for (const auto& candidate : shapes) {
    if (!candidate->right || !candidate->right->left) continue;
    if (candidate->balance.value() != +2 || candidate->right->balance.value() != -1) continue;

    IntLink direct = clone_subtree(candidate.get());
    rotate_rl(direct);

    IntLink composed = clone_subtree(candidate.get());
    rotate_ll(composed->right);
    rotate_rr(composed);

    EXPECT_EQ(shape(direct.get()), shape(composed.get())) << "from " << shape(candidate.get());
    EXPECT_TRUE(balances_match_heights(direct.get()));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace avl
