#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zigzag/engine.hpp"
#include "zigzag/mesh.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

/// All members of S_n(F) by full scan of S_n. The reference answer every
/// generator claim is compared against.
std::set<Permutation> brute_enumerate(const PatternFormula& f, int n);

struct CheckResult {
  bool ok = true;
  std::optional<Permutation> witness;
  std::string detail;
};

/// Closure under boundary insertion at every level up to n, on the sets
/// derived by repeated largest-value removal from S_n(F).
CheckResult is_zigzag(const PatternFormula& f, int n);

/// Largest-value removal maps S_m(F) onto S_{m-1}(F) for all m <= n.
CheckResult is_hereditary(const PatternFormula& f, int n);

struct GrayCheck {
  bool ok = true;
  long long first_bad_index = -1;  // index into the sequence, or -1
  std::string detail;
};

/// Checks: no repeats; set equality with the language; every consecutive
/// pair related by a jump minimal w.r.t. the oracle; identity first.
GrayCheck validate_gray(const std::vector<Permutation>& seq,
                        const LanguageOracle& oracle);

/// Infers the jump transforming a into b, if one exists.
std::optional<JumpStep> jump_between(const Permutation& a,
                                     const Permutation& b);

struct CountFixture {
  std::string id;
  PatternFormula formula;
  std::vector<long long> expected;  // counts for n = 1..expected.size()
  std::string source;               // where the digits come from
};

struct CountRow {
  std::string id;
  bool ok = true;
  std::vector<long long> brute, generated;
};

/// Compares brute-force counts and generated-stream lengths against each
/// fixture's expectations.
std::vector<CountRow> count_suite(const std::vector<CountFixture>& fixtures);

}  // namespace zigzag
