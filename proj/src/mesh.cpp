#include "zigzag/mesh.hpp"

#include <algorithm>

#include "zigzag/grid.hpp"

namespace zigzag {

MeshPattern::MeshPattern(Permutation t, std::set<Cell> c)
    : tau(std::move(t)), cells(std::move(c)) {
  if (tau.size() < 1) throw error("mesh pattern needs k >= 1");
  for (const auto& [x, y] : cells)
    if (x < 0 || x > tau.size() || y < 0 || y > tau.size())
      throw error("mesh cell index out of range");
}

std::string MeshPattern::str() const {
  std::string s = "(" + tau.str() + "; {";
  bool first = true;
  for (const auto& [x, y] : cells) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return s + "})";
}

GridAtom::GridAtom(int cols_, int rows_, std::vector<int> entries, GridKind k)
    : cols(cols_), rows(rows_), m(std::move(entries)), kind(k) {
  if (cols < 1 || rows < 1 || m.size() != static_cast<size_t>(cols) * static_cast<size_t>(rows))
    throw error("bad grid matrix shape");
  for (int v : m)
    if (v < -1 || v > 1) throw error("grid entries must be in {-1,0,+1}");
}

Pop::Pop(int k_, std::set<std::pair<int, int>> rel) : k(k_), relations(std::move(rel)) {
  if (k < 1) throw error("POP needs k >= 1");
  for (const auto& [a, b] : relations)
    if (a < 1 || a > k || b < 1 || b > k || a == b) throw error("bad POP relation");
}

PatternFormula PatternFormula::all() { return PatternFormula{}; }

PatternFormula PatternFormula::make_leaf(CountedPattern cp) {
  PatternFormula f;
  f.kind = Kind::Leaf;
  f.leaf = std::move(cp);
  return f;
}

PatternFormula PatternFormula::make_leaf(MeshPattern mp, long long cap) {
  return make_leaf(CountedPattern{std::move(mp), cap});
}

PatternFormula PatternFormula::make_grid(GridAtom g) {
  PatternFormula f;
  f.kind = Kind::Grid;
  f.grid = std::move(g);
  return f;
}

PatternFormula PatternFormula::conj(std::vector<PatternFormula> parts) {
  PatternFormula f;
  f.kind = Kind::And;
  f.children = std::move(parts);
  return f;
}

PatternFormula PatternFormula::disj(std::vector<PatternFormula> parts) {
  PatternFormula f;
  f.kind = Kind::Or;
  f.children = std::move(parts);
  return f;
}

namespace {

bool contains_from(const std::vector<int>& a, const std::vector<int>& t,
                   size_t ai, size_t ti, std::vector<int>& picked) {
  if (ti == t.size()) return true;
  if (t.size() - ti > a.size() - ai) return false;
  for (size_t j = ai; j < a.size(); ++j) {
    // order-isomorphism check against already picked entries
    bool ok = true;
    for (size_t q = 0; q < ti; ++q) {
      const bool want = t[q] < t[ti];
      const bool have = picked[q] < a[j];
      if (want != have) { ok = false; break; }
    }
    if (!ok) continue;
    picked[ti] = a[j];
    if (contains_from(a, t, j + 1, ti + 1, picked)) return true;
  }
  return false;
}

}  // namespace

bool contains_classical(const Permutation& pi, const Permutation& tau) {
  if (tau.empty()) return true;
  if (tau.size() > pi.size()) return false;
  std::vector<int> picked(static_cast<size_t>(tau.size()));
  return contains_from(pi.entries(), tau.entries(), 0, 0, picked);
}

namespace {

// One match candidate: positions idx[0] < ... < idx[k-1] (0-based into pi).
// Checks order-isomorphism with tau and emptiness of the shaded cells.
bool match_at(const Permutation& pi, const MeshPattern& sigma,
              const std::vector<int>& idx) {
  const int k = sigma.length();
  const auto& a = pi.entries();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool want = sigma.tau.at(i + 1) < sigma.tau.at(j + 1);
      const bool have = a[static_cast<size_t>(idx[static_cast<size_t>(i)])] <
                        a[static_cast<size_t>(idx[static_cast<size_t>(j)])];
      if (want != have) return false;
    }
  if (sigma.cells.empty()) return true;

  // Sorted matched values give the row boundaries; matched positions give
  // the column boundaries. Sentinels 0 and n+1 at the borders.
  const int n = pi.size();
  std::vector<int> vals(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    vals[static_cast<size_t>(i)] = a[static_cast<size_t>(idx[static_cast<size_t>(i)])];
  std::vector<int> sv = vals;
  std::sort(sv.begin(), sv.end());

  auto col_lo = [&](int c) { return c == 0 ? 0 : idx[static_cast<size_t>(c - 1)] + 1; };  // 1-based pos
  auto col_hi = [&](int c) { return c == k ? n + 1 : idx[static_cast<size_t>(c)] + 1; };
  auto row_lo = [&](int r) { return r == 0 ? 0 : sv[static_cast<size_t>(r - 1)]; };
  auto row_hi = [&](int r) { return r == k ? n + 1 : sv[static_cast<size_t>(r)]; };

  for (const auto& [c, r] : sigma.cells) {
    for (int pos = col_lo(c) + 1; pos < col_hi(c); ++pos) {
      const int v = a[static_cast<size_t>(pos - 1)];
      if (v > row_lo(r) && v < row_hi(r)) return false;  // point inside the cell
    }
  }
  return true;
}

}  // namespace

long long count_matches(const Permutation& pi, const MeshPattern& sigma,
                        std::optional<long long> cap) {
  const int n = pi.size();
  const int k = sigma.length();
  if (k > n) return 0;
  long long count = 0;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    if (match_at(pi, sigma, idx)) {
      ++count;
      if (cap && count > *cap) return count;
    }
    // next k-combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return count;
}

bool contains_mesh(const Permutation& pi, const MeshPattern& sigma) {
  return count_matches(pi, sigma, 0) > 0;
}

bool evaluate(const PatternFormula& f, const Permutation& pi) {
  switch (f.kind) {
    case PatternFormula::Kind::Leaf:
      return count_matches(pi, f.leaf->pattern, f.leaf->cap) <= f.leaf->cap;
    case PatternFormula::Kind::Grid:
      return atom_contains(*f.grid, pi);
    case PatternFormula::Kind::And:
      for (const auto& c : f.children)
        if (!evaluate(c, pi)) return false;
      return true;
    case PatternFormula::Kind::Or:
      for (const auto& c : f.children)
        if (evaluate(c, pi)) return true;
      return false;
  }
  return false;
}

namespace {

void extend(const Pop& p, std::vector<int>& prefix, std::vector<bool>& used,
            std::vector<Permutation>& out) {
  if (static_cast<int>(prefix.size()) == p.k) {
    out.emplace_back(prefix);
    return;
  }
  for (int x = 1; x <= p.k; ++x) {
    if (used[static_cast<size_t>(x)]) continue;
    bool ok = true;
    for (const auto& [a, b] : p.relations)
      if (b == x && !used[static_cast<size_t>(a)]) { ok = false; break; }
    if (!ok) continue;
    used[static_cast<size_t>(x)] = true;
    prefix.push_back(x);
    extend(p, prefix, used, out);
    prefix.pop_back();
    used[static_cast<size_t>(x)] = false;
  }
}

}  // namespace

std::vector<Permutation> linear_extensions(const Pop& p) {
  // cycle check: repeatedly strip sources
  {
    std::set<int> alive;
    for (int i = 1; i <= p.k; ++i) alive.insert(i);
    bool progress = true;
    while (progress && !alive.empty()) {
      progress = false;
      for (int x : std::vector<int>(alive.begin(), alive.end())) {
        bool minimal = true;
        for (const auto& [a, b] : p.relations)
          if (b == x && alive.count(a)) { minimal = false; break; }
        if (minimal) {
          alive.erase(x);
          progress = true;
        }
      }
    }
    if (!alive.empty()) throw error("cyclic POP relations");
  }
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<size_t>(p.k) + 1, false);
  extend(p, prefix, used, out);
  return out;
}

}  // namespace zigzag
