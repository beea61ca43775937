#pragma once

// Reference predicates implemented straight from the definitions. They share
// no code with the production matcher: everything here works by exhaustive
// subsequence enumeration.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "zigzag/perm.hpp"

namespace refsem {

using zigzag::Permutation;

// Calls fn on every increasing index vector of length k over 1..n.
template <typename Fn>
bool any_subsequence(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
  for (;;) {
    if (fn(idx)) return true;
    int j = k - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == n - (k - 1 - j)) --j;
    if (j < 0) return false;
    ++idx[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
}

inline bool order_iso(const Permutation& pi, const std::vector<int>& idx,
                      const Permutation& tau) {
  const int k = static_cast<int>(idx.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const bool pl = pi.at(idx[static_cast<size_t>(a)]) < pi.at(idx[static_cast<size_t>(b)]);
      const bool tl = tau.at(a + 1) < tau.at(b + 1);
      if (pl != tl) return false;
    }
  return true;
}

inline bool contains_classical(const Permutation& pi, const Permutation& tau) {
  return any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    return order_iso(pi, idx, tau);
  });
}

// Number of occurrences, for cross-checking counted patterns.
inline long long count_classical(const Permutation& pi, const Permutation& tau) {
  long long total = 0;
  any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    if (order_iso(pi, idx, tau)) ++total;
    return false;
  });
  return total;
}

// Vincular: the entries matched to tau positions a and a+1 are adjacent in pi.
inline bool contains_vincular(const Permutation& pi, const Permutation& tau, int a) {
  return any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    if (idx[static_cast<size_t>(a)] != idx[static_cast<size_t>(a - 1)] + 1) return false;
    return order_iso(pi, idx, tau);
  });
}

// Bivincular: additionally, for each b in rows, the entries matched to tau
// values b and b+1 are consecutive values in pi.
inline bool contains_bivincular(const Permutation& pi, const Permutation& tau,
                                int a, const std::set<int>& rows) {
  return any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    if (idx[static_cast<size_t>(a)] != idx[static_cast<size_t>(a - 1)] + 1) return false;
    if (!order_iso(pi, idx, tau)) return false;
    for (int b : rows) {
      const int lo = pi.at(idx[static_cast<size_t>(tau.position_of(b) - 1)]);
      const int hi = pi.at(idx[static_cast<size_t>(tau.position_of(b + 1) - 1)]);
      if (hi != lo + 1) return false;
    }
    return true;
  });
}

// Boxed: a match of tau with no other entry of pi at an interior position
// whose value lies between the match's extremes.
inline bool contains_boxed(const Permutation& pi, const Permutation& tau) {
  return any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    if (!order_iso(pi, idx, tau)) return false;
    int lo = pi.size() + 1, hi = 0;
    for (int i : idx) {
      lo = std::min(lo, pi.at(i));
      hi = std::max(hi, pi.at(i));
    }
    for (int p = idx.front() + 1; p < idx.back(); ++p) {
      if (std::find(idx.begin(), idx.end(), p) != idx.end()) continue;
      if (pi.at(p) > lo && pi.at(p) < hi) return false;
    }
    return true;
  });
}

// Bruhat restrictions: for each pair (a, b), no entry strictly between the
// matched positions has a value strictly between the matched values.
inline bool contains_bruhat(const Permutation& pi, const Permutation& tau,
                            const std::vector<std::pair<int, int>>& pairs) {
  return any_subsequence(pi.size(), tau.size(), [&](const std::vector<int>& idx) {
    if (!order_iso(pi, idx, tau)) return false;
    for (const auto& [a, b] : pairs) {
      const int ia = idx[static_cast<size_t>(a - 1)], ib = idx[static_cast<size_t>(b - 1)];
      const int va = pi.at(ia), vb = pi.at(ib);
      for (int p = ia + 1; p < ib; ++p)
        if (pi.at(p) > va && pi.at(p) < vb) return false;
    }
    return true;
  });
}

// Does the match at idx extend to a match of tau_prime with the matched
// entries at the positions not in bar_positions (sorted)?
inline bool extends_to_full(const Permutation& pi, const std::vector<int>& idx,
                            const Permutation& tau_prime,
                            const std::vector<int>& bar_positions) {
  const int k = tau_prime.size();
  // candidate positions for the barred slots: any unused entries of pi
  std::vector<int> extra(bar_positions.size());
  std::vector<int> full(static_cast<size_t>(k));
  auto assemble = [&]() {
    size_t u = 0, b = 0;
    for (int p = 1; p <= k; ++p) {
      const bool barred =
          std::find(bar_positions.begin(), bar_positions.end(), p) != bar_positions.end();
      full[static_cast<size_t>(p - 1)] = barred ? extra[b++] : idx[u++];
    }
    if (!std::is_sorted(full.begin(), full.end())) return false;
    if (std::adjacent_find(full.begin(), full.end()) != full.end()) return false;
    return order_iso(pi, full, tau_prime);
  };
  // recursive choice of the extra entries
  std::function<bool(size_t)> choose = [&](size_t d) -> bool {
    if (d == extra.size()) return assemble();
    for (int p = 1; p <= pi.size(); ++p) {
      if (std::find(idx.begin(), idx.end(), p) != idx.end()) continue;
      if (std::find(extra.begin(), extra.begin() + static_cast<long>(d), p) !=
          extra.begin() + static_cast<long>(d))
        continue;
      extra[d] = p;
      if (choose(d + 1)) return true;
    }
    return false;
  };
  return choose(0);
}

// Barred containment: a match of the reduced pattern that is not part of any
// match of tau_prime with the reduced entries at the unbarred positions.
inline bool contains_barred(const Permutation& pi, const Permutation& tau_prime,
                            const std::vector<int>& bar_positions,
                            const Permutation& reduced) {
  return any_subsequence(pi.size(), reduced.size(), [&](const std::vector<int>& idx) {
    if (!order_iso(pi, idx, reduced)) return false;
    return !extends_to_full(pi, idx, tau_prime, bar_positions);
  });
}

// Weak containment: a match of the reduced pattern that cannot be extended to
// a match of tau_prime by adding one entry of pi at any slot.
inline bool weakly_contains(const Permutation& pi, const Permutation& tau_prime,
                            const Permutation& reduced) {
  const int k = tau_prime.size();
  return any_subsequence(pi.size(), reduced.size(), [&](const std::vector<int>& idx) {
    if (!order_iso(pi, idx, reduced)) return false;
    for (int p = 1; p <= pi.size(); ++p) {
      if (std::find(idx.begin(), idx.end(), p) != idx.end()) continue;
      std::vector<int> full(idx);
      full.push_back(p);
      std::sort(full.begin(), full.end());
      if (static_cast<int>(full.size()) == k && order_iso(pi, full, tau_prime))
        return false;  // extendable
    }
    return true;
  });
}

// Dotted containment: weak containment of some single-barred variant with the
// bar over an undotted entry.
inline bool contains_dotted(const Permutation& pi, const Permutation& tau,
                            const std::set<int>& dotted) {
  const int k = tau.size();
  for (int p = 1; p <= k; ++p) {
    if (dotted.count(p)) continue;
    std::vector<int> vals;
    for (int q = 1; q <= k; ++q)
      if (q != p) vals.push_back(tau.at(q));
    // order-isomorphic reduction of the unbarred entries
    std::vector<int> sorted(vals);
    std::sort(sorted.begin(), sorted.end());
    for (int& v : vals)
      v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                           sorted.begin()) + 1;
    if (weakly_contains(pi, tau, Permutation(vals))) return true;
  }
  return false;
}

// POP matches: index tuples whose values respect every poset relation.
inline long long count_pop(const Permutation& pi, int k,
                           const std::set<std::pair<int, int>>& relations) {
  long long total = 0;
  any_subsequence(pi.size(), k, [&](const std::vector<int>& idx) {
    for (const auto& [a, b] : relations)
      if (pi.at(idx[static_cast<size_t>(a - 1)]) >= pi.at(idx[static_cast<size_t>(b - 1)]))
        return false;
    ++total;
    return false;
  });
  return total;
}

inline bool contains_pop(const Permutation& pi, int k,
                         const std::set<std::pair<int, int>>& relations) {
  bool found = false;
  any_subsequence(pi.size(), k, [&](const std::vector<int>& idx) {
    for (const auto& [a, b] : relations)
      if (pi.at(idx[static_cast<size_t>(a - 1)]) >= pi.at(idx[static_cast<size_t>(b - 1)]))
        return false;
    found = true;
    return true;
  });
  return found;
}

// All permutations of S_n in lexicographic order.
inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace refsem
