#include "zigzag/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace zigzag {

std::set<Permutation> brute_enumerate(const PatternFormula& f, int n) {
  std::set<Permutation> out;
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  if (n == 0) {
    if (evaluate(f, Permutation())) out.insert(Permutation());
    return out;
  }
  do {
    Permutation p(v);
    if (evaluate(f, p)) out.insert(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

CheckResult is_zigzag(const PatternFormula& f, int n) {
  std::vector<std::set<Permutation>> levels(static_cast<size_t>(n) + 1);
  levels[static_cast<size_t>(n)] = brute_enumerate(f, n);
  for (int m = n; m >= 1; --m)
    for (const auto& p : levels[static_cast<size_t>(m)])
      levels[static_cast<size_t>(m - 1)].insert(p.remove_largest());

  for (int m = 1; m <= n; ++m) {
    const auto& cur = levels[static_cast<size_t>(m)];
    for (const auto& p : levels[static_cast<size_t>(m - 1)]) {
      if (!cur.count(p.insert_largest(1)))
        return {false, p, "boundary insertion at the left end leaves the language"};
      if (!cur.count(p.insert_largest(m)))
        return {false, p, "boundary insertion at the right end leaves the language"};
    }
  }
  return {};
}

CheckResult is_hereditary(const PatternFormula& f, int n) {
  std::set<Permutation> upper = brute_enumerate(f, n);
  for (int m = n; m >= 2; --m) {
    std::set<Permutation> projected;
    for (const auto& p : upper) projected.insert(p.remove_largest());
    std::set<Permutation> lower = brute_enumerate(f, m - 1);
    if (projected != lower) {
      // a witness on either side of the symmetric difference
      for (const auto& p : lower)
        if (!projected.count(p))
          return {false, p, "member at length " + std::to_string(m - 1) +
                                " is not a projection from above"};
      for (const auto& p : projected)
        if (!lower.count(p))
          return {false, p, "projection is not a member at length " +
                                std::to_string(m - 1)};
    }
    upper = std::move(lower);
  }
  return {};
}

std::optional<JumpStep> jump_between(const Permutation& a,
                                     const Permutation& b) {
  if (a.size() != b.size() || a == b) return std::nullopt;
  const int n = a.size();
  // the jumping value moves farthest; skipped entries shift by one
  int value = 0, delta = 0;
  for (int v = 1; v <= n; ++v) {
    const int d = b.position_of(v) - a.position_of(v);
    if (std::abs(d) > std::abs(delta) ||
        (std::abs(d) == std::abs(delta) && d != 0 && v > value)) {
      value = v;
      delta = d;
    }
  }
  if (value == 0) return std::nullopt;
  JumpStep j{value, delta > 0 ? Direction::Right : Direction::Left,
             std::abs(delta)};
  try {
    if (jump(a, j.value, j.dir, j.steps) == b) return j;
  } catch (const error&) {
  }
  return std::nullopt;
}

GrayCheck validate_gray(const std::vector<Permutation>& seq,
                        const LanguageOracle& oracle) {
  if (seq.empty()) return {false, -1, "empty sequence"};
  const int n = seq.front().size();
  if (seq.front() != Permutation::identity(n))
    return {false, 0, "first element is not the identity"};

  std::unordered_set<Permutation> seen;
  for (size_t i = 0; i < seq.size(); ++i)
    if (!seen.insert(seq[i]).second)
      return {false, static_cast<long long>(i), "repeated permutation"};

  const auto lang = enumerate_language(oracle, n);
  if (lang.size() != seq.size() ||
      !std::all_of(seq.begin(), seq.end(),
                   [&](const Permutation& p) { return oracle.contains(p); }))
    return {false, -1, "sequence is not the language as a set"};

  for (size_t i = 1; i < seq.size(); ++i) {
    const auto j = jump_between(seq[i - 1], seq[i]);
    if (!j) return {false, static_cast<long long>(i), "consecutive pair not a jump"};
    const auto minimal = minimal_jump(seq[i - 1], j->value, j->dir, oracle);
    if (!minimal || *minimal != seq[i])
      return {false, static_cast<long long>(i), "jump is not minimal"};
  }
  return {};
}

std::vector<CountRow> count_suite(const std::vector<CountFixture>& fixtures) {
  std::vector<CountRow> rows;
  for (const auto& fx : fixtures) {
    CountRow row;
    row.id = fx.id;
    const int top = static_cast<int>(fx.expected.size());
    for (int n = 1; n <= top; ++n) {
      const long long brute =
          static_cast<long long>(brute_enumerate(fx.formula, n).size());
      FormulaOracle oracle(fx.formula, n);
      const long long gen =
          static_cast<long long>(generate_ordered(oracle, n).size());
      row.brute.push_back(brute);
      row.generated.push_back(gen);
      if (brute != fx.expected[static_cast<size_t>(n - 1)] || gen != brute)
        row.ok = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zigzag
