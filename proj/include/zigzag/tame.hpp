#pragma once

#include <string>
#include <vector>

#include "zigzag/compile.hpp"
#include "zigzag/mesh.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

enum class Verdict { Tame, NotTame, Unknown };

std::string to_string(Verdict v);

struct ConditionCheck {
  std::string name;     // "i", "ii", "iii", "iv", or a named rule
  bool passed = true;
  std::string witness;  // offending cell/position when failed
};

struct TameReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<ConditionCheck> conditions;
  // Set when the necessary conditions pass but a sufficient-only condition
  // fails: the pattern may still generate correctly, so callers can fall
  // back to empirical verification.
  bool criterion_incomplete = false;
  std::string note;

  std::string str() const;
  std::string json() const;
};

/// The four-condition sufficient criterion on a mesh pattern (k >= 3).
TameReport check_mesh(const MeshPattern& sigma);

/// Corner rule for grid atoms: top-left entry -1, top-right entry +1.
TameReport check_grid(const GridAtom& g);

/// Tame iff every mesh leaf and every grid atom passes its check.
TameReport check_formula(const PatternFormula& f);

// Per-family sufficient conditions, checkable before compilation. Used as
// differential cross-checks against check_mesh on the compiled form.
TameReport shortcut_classical(const Permutation& tau);
TameReport shortcut_vincular(const VincularPattern& p);
TameReport shortcut_bivincular(const BivincularPattern& p);
TameReport shortcut_barred(const BarredPattern& p);  // single or multiple bars
TameReport shortcut_boxed(const BoxedPattern& p);
TameReport shortcut_bruhat(const BruhatPattern& p);
TameReport shortcut_pop(const Pop& p);
TameReport shortcut_dotted(const DottedPattern& p);

}  // namespace zigzag
