#include "zigzag/decode.hpp"

#include <algorithm>
#include <set>

namespace zigzag {

std::string BitString::str() const {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

BitString perm_to_bits(const Permutation& p) {
  const int n = p.size();
  std::vector<int> bits(n >= 1 ? static_cast<size_t>(n - 1) : 0);
  Permutation cur = p;
  for (int m = n; m >= 2; --m) {
    const int pos = cur.largest_position();
    if (pos == m) bits[static_cast<size_t>(m - 2)] = 0;
    else if (pos == 1) bits[static_cast<size_t>(m - 2)] = 1;
    else throw error("permutation has a peak; no code word exists");
    cur = cur.remove_largest();
  }
  return BitString{std::move(bits)};
}

Permutation bits_to_perm(const BitString& x) {
  Permutation p = Permutation::identity(1);
  for (size_t i = 0; i < x.bits.size(); ++i)
    p = x.bits[i] ? p.insert_largest(1) : p.insert_largest(p.size() + 1);
  return p;
}

BinaryTree make_node(int label, BinaryTree left, BinaryTree right) {
  auto n = std::make_shared<TreeNode>();
  n->label = label;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

bool tree_equal(const BinaryTree& a, const BinaryTree& b) {
  if (!a || !b) return !a && !b;
  return a->label == b->label && tree_equal(a->left, b->left) &&
         tree_equal(a->right, b->right);
}

std::string tree_str(const BinaryTree& t) {
  if (!t) return "()";
  return "(" + std::to_string(t->label) + " " + tree_str(t->left) + " " +
         tree_str(t->right) + ")";
}

namespace {

BinaryTree build_tree(const std::vector<int>& v, size_t lo, size_t hi) {
  if (lo == hi) return nullptr;
  const int root = v[lo];
  size_t split = lo + 1;
  while (split < hi && v[split] < root) ++split;
  for (size_t i = split; i < hi; ++i)
    if (v[i] < root) throw error("permutation contains the forbidden pattern; no tree exists");
  return make_node(root, build_tree(v, lo + 1, split), build_tree(v, split, hi));
}

void preorder(const BinaryTree& t, std::vector<int>& out) {
  if (!t) return;
  out.push_back(t->label);
  preorder(t->left, out);
  preorder(t->right, out);
}

}  // namespace

BinaryTree perm_to_tree(const Permutation& p) {
  return build_tree(p.entries(), 0, p.entries().size());
}

Permutation tree_to_perm(const BinaryTree& t) {
  std::vector<int> out;
  preorder(t, out);
  return Permutation(std::move(out));
}

std::string RotationMove::str() const {
  return std::string(dir == Direction::Right ? "right" : "left") +
         " rotation at " + std::to_string(node);
}

namespace {

int parent_of(const BinaryTree& t, int label) {
  const TreeNode* cur = t.get();
  int parent = 0;
  while (cur && cur->label != label) {
    parent = cur->label;
    cur = label < cur->label ? cur->left.get() : cur->right.get();
  }
  if (!cur) throw error("label not in tree");
  if (parent == 0) throw error("node has no parent");
  return parent;
}

}  // namespace

RotationMove interpret_jump_tree(const BinaryTree& t, const JumpStep& j) {
  if (j.dir == Direction::Right) return RotationMove{j.value, Direction::Right};
  return RotationMove{parent_of(t, j.value), Direction::Left};
}

BinaryTree apply_rotation(const BinaryTree& t, const RotationMove& m) {
  if (!t) throw error("rotation target not found");
  if (t->label != m.node) {
    if (m.node < t->label)
      return make_node(t->label, apply_rotation(t->left, m), t->right);
    return make_node(t->label, t->left, apply_rotation(t->right, m));
  }
  if (m.dir == Direction::Right) {
    if (!t->left) throw error("no left child to lift");
    return make_node(t->left->label, t->left->left,
                     make_node(t->label, t->left->right, t->right));
  }
  if (!t->right) throw error("no right child to lift");
  return make_node(t->right->label,
                   make_node(t->label, t->left, t->right->left),
                   t->right->right);
}

DyckPath tree_to_dyck(const BinaryTree& t) {
  if (!t) return DyckPath{""};
  return DyckPath{"U" + tree_to_dyck(t->left).word + "D" +
                  tree_to_dyck(t->right).word};
}

namespace {

BinaryTree parse_dyck(const std::string& w, size_t lo, size_t hi, int& next_label) {
  if (lo == hi) return nullptr;
  if (w[lo] != 'U') throw error("malformed path word");
  int depth = 1;
  size_t match = lo + 1;
  while (match < hi && depth > 0) {
    if (w[match] != 'U' && w[match] != 'D') throw error("malformed path word");
    depth += w[match] == 'U' ? 1 : -1;
    if (depth == 0) break;
    ++match;
  }
  if (depth != 0) throw error("unbalanced path word");
  // in-order labeling: left subtree first, then this node, then right
  BinaryTree left = parse_dyck(w, lo + 1, match, next_label);
  const int label = next_label++;
  BinaryTree right = parse_dyck(w, match + 1, hi, next_label);
  return make_node(label, std::move(left), std::move(right));
}

}  // namespace

BinaryTree dyck_to_tree(const DyckPath& d) {
  int next_label = 1;
  return parse_dyck(d.word, 0, d.word.size(), next_label);
}

SetPartition SetPartition::canonic(std::vector<std::vector<int>> blocks) {
  std::set<int> seen;
  int maxv = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw error("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || !seen.insert(x).second) throw error("not a partition of [n]");
      maxv = std::max(maxv, x);
    }
  }
  if (static_cast<int>(seen.size()) != maxv) throw error("not a partition of [n]");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() > b.front(); });
  return SetPartition{std::move(blocks)};
}

std::string SetPartition::str() const {
  int maxv = 0;
  for (const auto& b : blocks)
    for (int x : b) maxv = std::max(maxv, x);
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "|";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j && maxv >= 10) s += ",";
      s += std::to_string(blocks[i][j]);
    }
  }
  return s;
}

SetPartition perm_to_setpart(const Permutation& p) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= p.size(); ++i) {
    if (blocks.empty() || p.at(i) < blocks.back().back())
      blocks.emplace_back();
    blocks.back().push_back(p.at(i));
  }
  for (size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i].front() >= blocks[i - 1].front())
      throw error("block minima not decreasing; no partition exists");
  return SetPartition{std::move(blocks)};
}

Permutation setpart_to_perm(const SetPartition& sp) {
  const SetPartition c = SetPartition::canonic(sp.blocks);
  std::vector<int> out;
  for (const auto& b : c.blocks)
    for (int x : b) out.push_back(x);
  return Permutation(std::move(out));
}

std::string ElementMove::str() const {
  std::string s = "move " + std::to_string(element) + " from block " +
                  std::to_string(from_block) + " to block " +
                  std::to_string(to_block);
  if (creates_singleton) s += " (new singleton)";
  return s;
}

ElementMove interpret_jump_setpart(const SetPartition& sp, const JumpStep& j) {
  const Permutation before = setpart_to_perm(sp);
  const Permutation after = jump(before, j.value, j.dir, j.steps);
  const SetPartition next = perm_to_setpart(after);

  auto block_of = [](const SetPartition& part, int x) {
    for (size_t i = 0; i < part.blocks.size(); ++i)
      for (int y : part.blocks[i])
        if (y == x) return static_cast<int>(i);
    throw error("element not in partition");
  };
  ElementMove m;
  m.element = j.value;
  m.from_block = block_of(SetPartition::canonic(sp.blocks), j.value);
  m.to_block = block_of(next, j.value);
  m.creates_singleton =
      next.blocks[static_cast<size_t>(m.to_block)].size() == 1;
  return m;
}

}  // namespace zigzag
