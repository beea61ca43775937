#pragma once

#include <optional>
#include <vector>

#include "zigzag/oracle.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

enum class GenStatus { Complete, StalledNoJump, StalledAmbiguous };

struct GenResult {
  std::vector<Permutation> sequence;
  GenStatus status = GenStatus::Complete;
  long long visited_count = 0;
};

/// The jump of `value` in `dir` with the smallest step count whose result
/// the oracle accepts; nullopt if no feasible step count works.
std::optional<Permutation> minimal_jump(const Permutation& p, int value,
                                        Direction dir,
                                        const LanguageOracle& oracle);

/// The literal greedy algorithm: repeatedly perform a minimal jump of the
/// largest possible value leading to an unvisited member of the language;
/// stop on ambiguity or when no such jump exists. Status is Complete when
/// every member was visited.
GenResult generate_greedy(const LanguageOracle& oracle, int n,
                          const Permutation& seed,
                          std::optional<long long> limit = std::nullopt);

/// Streams the canonical ordering without a visited set: per-level sweep
/// directions only. Assumes the oracle describes a hereditary sequence of
/// zigzag languages (verified separately, not here).
class OrderedGenerator {
 public:
  OrderedGenerator(const LanguageOracle& oracle, int n);

  /// Next permutation of the ordering, or nullopt when exhausted. The
  /// first call yields the identity.
  std::optional<Permutation> next();

  /// Transition that produced the most recent permutation (empty for the
  /// first one).
  const std::optional<JumpStep>& last_jump() const { return last_jump_; }

 private:
  const LanguageOracle& oracle_;
  int n_;
  bool started_ = false;
  bool done_ = false;
  Permutation current_;
  std::vector<Direction> dir_;  // dir_[m] = sweep direction of value m
  std::optional<JumpStep> last_jump_;
};

std::vector<Permutation> generate_ordered(const LanguageOracle& oracle, int n);

/// All members of the induced language at length m, in lexicographic order.
std::vector<Permutation> enumerate_language(const LanguageOracle& oracle, int m);

/// Parity test: |L_i| even for all 2 <= i <= n-1 makes the ordering cyclic.
bool is_cyclic(const LanguageOracle& oracle, int n);

/// Peak-free members of L_n: all of them are valid greedy seeds.
std::vector<Permutation> seeds(const LanguageOracle& oracle, int n);

}  // namespace zigzag
