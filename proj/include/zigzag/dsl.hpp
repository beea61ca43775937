#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zigzag/compile.hpp"
#include "zigzag/mesh.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

/// Parse tree of the pattern language. Family nodes keep their original
/// shape so they can be emitted and transformed symbolically; compilation
/// lowers everything to a PatternFormula.
struct DslExpr {
  enum class Kind {
    All, And, Or, Trans,
    Cl, Vinc, Bivinc, Bar, WeakBar, Box, Bruhat, Mesh, Pop, Dot, Grid, Count
  };

  Kind kind = Kind::All;
  std::vector<DslExpr> children;             // And / Or / Trans / Count
  Transform op = Transform::Rev;             // Trans
  Permutation perm;                          // pattern base (tau or tau')
  int a = 0;                                 // Vinc / Bivinc position
  std::set<int> marks;                       // Bivinc rows; Dot positions
  std::vector<int> bars;                     // Bar / WeakBar positions
  std::vector<std::pair<int, int>> pairs;    // Bruhat
  std::set<Cell> cells;                      // Mesh
  Pop pop;                                   // Pop
  std::optional<GridAtom> grid;              // Grid
  long long cap = 0;                         // Count
};

/// Parses the pattern language; throws `error` with a position on bad input.
DslExpr parse_dsl(std::string_view src);

/// Canonical text form; parse(emit(parse(s))) emits the same text.
std::string emit_dsl(const DslExpr& e);

/// Lowers the expression to the formula algebra.
PatternFormula compile(const DslExpr& e);

/// Symbolic transformation. Families closed under the operation keep their
/// shape; others are lowered to mesh form first.
DslExpr transform_expr(Transform t, const DslExpr& e);

/// Replaces rev/cpl/inv/rot wrapper nodes by their symbolic action.
DslExpr resolve_transforms(const DslExpr& e);

}  // namespace zigzag
