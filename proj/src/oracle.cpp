#include "zigzag/oracle.hpp"

namespace zigzag {

bool FormulaOracle::contains(const Permutation& p) const {
  if (p.size() > n_) return false;
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  const bool r = evaluate(formula_, p);
  cache_.emplace(p, r);
  return r;
}

ExplicitOracle::ExplicitOracle(std::set<Permutation> top, int n) : n_(n) {
  levels_.resize(static_cast<size_t>(n) + 1);
  for (const auto& p : top) {
    if (p.size() != n) throw error("explicit oracle entries must have the top length");
    levels_[static_cast<size_t>(n)].insert(p);
  }
  for (int m = n; m >= 1; --m)
    for (const auto& p : levels_[static_cast<size_t>(m)])
      levels_[static_cast<size_t>(m - 1)].insert(p.remove_largest());
}

bool ExplicitOracle::contains(const Permutation& p) const {
  if (p.size() > n_) return false;
  return levels_[static_cast<size_t>(p.size())].count(p) > 0;
}

}  // namespace zigzag
