#pragma once

#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zigzag/mesh.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

/// Membership predicate for a language L_m at every length m <= max_length.
class LanguageOracle {
 public:
  virtual ~LanguageOracle() = default;
  virtual bool contains(const Permutation& p) const = 0;
  virtual int max_length() const = 0;
};

/// Membership by formula evaluation, memoized: minimal-jump scans query the
/// same permutations repeatedly.
class FormulaOracle : public LanguageOracle {
 public:
  FormulaOracle(PatternFormula f, int n) : formula_(std::move(f)), n_(n) {}

  bool contains(const Permutation& p) const override;
  int max_length() const override { return n_; }
  const PatternFormula& formula() const { return formula_; }

 private:
  PatternFormula formula_;
  int n_;
  mutable std::unordered_map<Permutation, bool> cache_;
};

/// Membership in an explicitly listed set at the top length; lower lengths
/// are derived by repeated largest-value removal.
class ExplicitOracle : public LanguageOracle {
 public:
  ExplicitOracle(std::set<Permutation> top, int n);

  bool contains(const Permutation& p) const override;
  int max_length() const override { return n_; }

 private:
  int n_;
  std::vector<std::unordered_set<Permutation>> levels_;  // levels_[m] = L_m
};

}  // namespace zigzag
