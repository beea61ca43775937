#pragma once

#include <set>
#include <utility>
#include <vector>

#include "zigzag/mesh.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

/// Vincular pattern: the entries at positions a and a+1 must match adjacent
/// positions. Compiles to a fully shaded column a.
struct VincularPattern {
  Permutation tau;
  int a = 0;
};

/// Bivincular pattern: vincular plus value-consecutivity rows.
struct BivincularPattern {
  Permutation tau;
  int a = 0;
  std::set<int> rows;  // subset of [k-1]
};

/// Barred pattern: tau_prime with bars at the given 1-based positions.
struct BarredPattern {
  Permutation tau_prime;
  std::vector<int> bar_positions;  // sorted, distinct

  int bars() const { return static_cast<int>(bar_positions.size()); }
  /// The non-barred entries, order-isomorphically reduced.
  Permutation reduced() const;
};

struct BoxedPattern {
  Permutation tau;
};

/// Pattern with Bruhat restrictions: index pairs (a,b) with a < b,
/// tau(a) < tau(b), and no interior entry with value between them.
struct BruhatPattern {
  Permutation tau;
  std::vector<std::pair<int, int>> pairs;
};

/// Dotted pattern: dots at positions I; avoidance means weak avoidance of
/// every single-barred variant with the bar over an undotted entry.
struct DottedPattern {
  Permutation tau;
  std::set<int> dotted;  // subset of [k]
};

MeshPattern compile_classical(const Permutation& tau);
MeshPattern compile_vincular(const VincularPattern& p);
MeshPattern compile_bivincular(const BivincularPattern& p);
MeshPattern compile_barred_single(const BarredPattern& p);
/// AND of the single-barred reductions; errors if two barred entries sit at
/// neighboring positions or have adjacent values (the reduction is only
/// valid under that separation).
PatternFormula compile_barred_multi(const BarredPattern& p);
MeshPattern compile_boxed(const BoxedPattern& p);
MeshPattern compile_bruhat(const BruhatPattern& p);
PatternFormula compile_pop(const Pop& p);
/// OR over all compositions of c into |L(P)| parts of ANDs of counted
/// classical patterns. Errors when the number of OR terms would exceed
/// max_terms.
PatternFormula compile_counted_pop(const Pop& p, long long c,
                                   long long max_terms = 10000);
/// Weak avoidance of a single-barred pattern: staircase cells along the
/// maximal monotone run of consecutive values through the barred entry.
MeshPattern compile_weak_barred(const BarredPattern& p);
PatternFormula compile_dotted(const DottedPattern& p);

enum class Transform { Rev, Cpl, Inv, Rot };

Permutation transform(Transform t, const Permutation& tau);
MeshPattern transform(Transform t, const MeshPattern& sigma);
GridAtom transform(Transform t, const GridAtom& g);
PatternFormula transform(Transform t, const PatternFormula& f);

}  // namespace zigzag
