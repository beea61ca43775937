#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/perm.hpp"

namespace zigzag {

using Cell = std::pair<int, int>;  // (column, row), each in 0..k

/// A base permutation tau of length k plus a set of shaded cells in the
/// grid representation; a match of tau must leave every shaded cell empty.
struct MeshPattern {
  Permutation tau;
  std::set<Cell> cells;

  MeshPattern() = default;
  MeshPattern(Permutation t, std::set<Cell> c);

  int length() const { return tau.size(); }
  bool operator==(const MeshPattern&) const = default;
  std::string str() const;
};

/// Mesh pattern with an allowed number of matches; cap 0 is avoidance.
struct CountedPattern {
  MeshPattern pattern;
  long long cap = 0;

  bool operator==(const CountedPattern&) const = default;
};

enum class GridKind { Monotone, Geometric };

/// Signed cell matrix for a monotone or geometric grid class. Stored with
/// columns indexed 1..cols left to right and rows 1..rows bottom to top.
struct GridAtom {
  int cols = 0;
  int rows = 0;
  std::vector<int> m;  // entries in {-1,0,+1}, row-major from bottom row
  GridKind kind = GridKind::Monotone;

  GridAtom() = default;
  GridAtom(int cols_, int rows_, std::vector<int> entries, GridKind k);

  int at(int col, int row) const {  // 1-based, row 1 = bottom
    return m[static_cast<size_t>((row - 1) * cols + (col - 1))];
  }
  bool operator==(const GridAtom&) const = default;
};

/// Partially ordered pattern on {1..k}; relations are pairs (a, b) meaning
/// a precedes b (b is above a).
struct Pop {
  int k = 0;
  std::set<std::pair<int, int>> relations;

  Pop() = default;
  Pop(int k_, std::set<std::pair<int, int>> rel);
};

/// AND/OR tree over counted mesh patterns and grid-class atoms. An empty
/// AND is the full language, an empty OR the empty language.
struct PatternFormula {
  enum class Kind { And, Or, Leaf, Grid };

  Kind kind = Kind::And;
  std::vector<PatternFormula> children;       // And / Or
  std::optional<CountedPattern> leaf;         // Leaf
  std::optional<GridAtom> grid;               // Grid

  static PatternFormula all();  // empty AND: every permutation
  static PatternFormula make_leaf(CountedPattern cp);
  static PatternFormula make_leaf(MeshPattern mp, long long cap = 0);
  static PatternFormula make_grid(GridAtom g);
  static PatternFormula conj(std::vector<PatternFormula> parts);
  static PatternFormula disj(std::vector<PatternFormula> parts);
};

/// Reference containment test for classical patterns, by direct subsequence
/// search; independent of the mesh matcher.
bool contains_classical(const Permutation& pi, const Permutation& tau);

/// Number of matches of the mesh pattern in pi. If cap is given, counting
/// stops at cap + 1.
long long count_matches(const Permutation& pi, const MeshPattern& sigma,
                        std::optional<long long> cap = std::nullopt);

bool contains_mesh(const Permutation& pi, const MeshPattern& sigma);

bool evaluate(const PatternFormula& f, const Permutation& pi);

/// All linear extensions of the poset, in lexicographic order. Errors on a
/// cyclic relation set.
std::vector<Permutation> linear_extensions(const Pop& p);

}  // namespace zigzag
