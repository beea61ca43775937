#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zigzag/perm.hpp"

namespace zigzag {

/// Bits x_2 ... x_n of a length-n code word; printed left to right.
struct BitString {
  std::vector<int> bits;

  bool operator==(const BitString&) const = default;
  std::string str() const;
};

/// Binary tree with the search-tree labeling: left subtree < label < right
/// subtree. Empty tree is the null pointer.
struct TreeNode {
  int label = 0;
  std::shared_ptr<const TreeNode> left, right;
};
using BinaryTree = std::shared_ptr<const TreeNode>;

BinaryTree make_node(int label, BinaryTree left = nullptr,
                     BinaryTree right = nullptr);
bool tree_equal(const BinaryTree& a, const BinaryTree& b);
/// Nested parentheses: "()" for empty, "(label left right)" otherwise.
std::string tree_str(const BinaryTree& t);

/// Balanced U/D word with nonnegative prefix sums.
struct DyckPath {
  std::string word;

  bool operator==(const DyckPath&) const = default;
};

/// Partition of [n] in canonic order: blocks sorted by decreasing minima,
/// elements increasing within each block.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  bool operator==(const SetPartition&) const = default;
  /// Bar notation, e.g. "9|6|347|1258"; commas within blocks when n >= 10.
  std::string str() const;
  /// Sorts blocks/elements into canonic order and validates the partition.
  static SetPartition canonic(std::vector<std::vector<int>> blocks);
};

// -- bitstrings (peak-free permutations) --
BitString perm_to_bits(const Permutation& p);  // error if p has a peak
Permutation bits_to_perm(const BitString& x);

// -- binary trees (231-avoiding permutations, preorder readout) --
BinaryTree perm_to_tree(const Permutation& p);  // error if p contains 231
Permutation tree_to_perm(const BinaryTree& t);

/// One tree rotation: right rotation at `node` lifts its left child; left
/// rotation lifts its right child.
struct RotationMove {
  int node = 0;
  Direction dir = Direction::Left;

  bool operator==(const RotationMove&) const = default;
  std::string str() const;
};

/// The rotation corresponding to one jump: a right jump of value i is a
/// right rotation at node i; a left jump is a left rotation at i's parent.
RotationMove interpret_jump_tree(const BinaryTree& t, const JumpStep& j);
BinaryTree apply_rotation(const BinaryTree& t, const RotationMove& m);

// -- Dyck paths --
DyckPath tree_to_dyck(const BinaryTree& t);
BinaryTree dyck_to_tree(const DyckPath& d);

// -- set partitions (permutations avoiding the adjacent-pair pattern 1-32) --
SetPartition perm_to_setpart(const Permutation& p);  // error on a bad descent
Permutation setpart_to_perm(const SetPartition& sp);

/// One element move between blocks of the canonic representation.
struct ElementMove {
  int element = 0;
  int from_block = 0;         // index in the source partition
  int to_block = 0;           // index in the target partition
  bool creates_singleton = false;

  bool operator==(const ElementMove&) const = default;
  std::string str() const;
};

ElementMove interpret_jump_setpart(const SetPartition& sp, const JumpStep& j);

}  // namespace zigzag
