#include "zigzag/compile.hpp"

#include <algorithm>
#include <cstdlib>

namespace zigzag {

namespace {

Permutation reduce(const std::vector<int>& vals) {
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(vals.size());
  for (int v : vals) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

}  // namespace

Permutation BarredPattern::reduced() const {
  std::vector<int> vals;
  for (int i = 1; i <= tau_prime.size(); ++i)
    if (std::find(bar_positions.begin(), bar_positions.end(), i) == bar_positions.end())
      vals.push_back(tau_prime.at(i));
  return reduce(vals);
}

MeshPattern compile_classical(const Permutation& tau) {
  return MeshPattern(tau, {});
}

MeshPattern compile_vincular(const VincularPattern& p) {
  const int k = p.tau.size();
  if (p.a < 1 || p.a > k - 1) throw error("vincular position out of range");
  std::set<Cell> cells;
  for (int j = 0; j <= k; ++j) cells.insert({p.a, j});
  return MeshPattern(p.tau, std::move(cells));
}

MeshPattern compile_bivincular(const BivincularPattern& p) {
  const int k = p.tau.size();
  MeshPattern m = compile_vincular(VincularPattern{p.tau, p.a});
  for (int b : p.rows) {
    if (b < 1 || b > k - 1) throw error("bivincular row out of range");
    for (int i = 0; i <= k; ++i) m.cells.insert({i, b});
  }
  return m;
}

MeshPattern compile_barred_single(const BarredPattern& p) {
  if (p.bars() != 1) throw error("expected exactly one bar");
  const int a = p.bar_positions.front();
  const int k = p.tau_prime.size();
  if (a < 1 || a > k) throw error("bar position out of range");
  const int b = p.tau_prime.at(a);
  return MeshPattern(p.reduced(), {{a - 1, b - 1}});
}

PatternFormula compile_barred_multi(const BarredPattern& p) {
  if (p.bars() < 2) throw error("expected at least two bars");
  for (size_t i = 0; i < p.bar_positions.size(); ++i)
    for (size_t j = i + 1; j < p.bar_positions.size(); ++j) {
      const int pi_ = p.bar_positions[i], pj = p.bar_positions[j];
      if (std::abs(pi_ - pj) == 1)
        throw error("barred entries at neighboring positions: the AND reduction does not apply");
      if (std::abs(p.tau_prime.at(pi_) - p.tau_prime.at(pj)) == 1)
        throw error("barred entries with adjacent values: the AND reduction does not apply");
    }
  std::vector<PatternFormula> parts;
  for (int keep : p.bar_positions) {
    std::vector<int> vals;
    int new_bar = 0;
    for (int i = 1; i <= p.tau_prime.size(); ++i) {
      const bool barred = std::find(p.bar_positions.begin(), p.bar_positions.end(), i) !=
                          p.bar_positions.end();
      if (barred && i != keep) continue;
      vals.push_back(p.tau_prime.at(i));
      if (i == keep) new_bar = static_cast<int>(vals.size());
    }
    BarredPattern single{reduce(vals), {new_bar}};
    parts.push_back(PatternFormula::make_leaf(compile_barred_single(single)));
  }
  return PatternFormula::conj(std::move(parts));
}

MeshPattern compile_boxed(const BoxedPattern& p) {
  const int k = p.tau.size();
  std::set<Cell> cells;
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - 1; ++j) cells.insert({i, j});
  return MeshPattern(p.tau, std::move(cells));
}

MeshPattern compile_bruhat(const BruhatPattern& p) {
  const int k = p.tau.size();
  std::set<Cell> cells;
  for (const auto& [a, b] : p.pairs) {
    if (a < 1 || b > k || a >= b || p.tau.at(a) >= p.tau.at(b))
      throw error("invalid Bruhat pair");
    for (int i = a + 1; i < b; ++i)
      if (p.tau.at(i) > p.tau.at(a) && p.tau.at(i) < p.tau.at(b))
        throw error("Bruhat pair has an interior value inside the band");
    for (int i = a; i < b; ++i)
      for (int j = p.tau.at(a); j < p.tau.at(b); ++j) cells.insert({i, j});
  }
  return MeshPattern(p.tau, std::move(cells));
}

PatternFormula compile_pop(const Pop& p) {
  std::vector<PatternFormula> parts;
  for (const auto& x : linear_extensions(p))
    parts.push_back(PatternFormula::make_leaf(compile_classical(x.inverse())));
  return PatternFormula::conj(std::move(parts));
}

namespace {

void compositions(long long c, int parts, std::vector<long long>& cur,
                  std::vector<std::vector<long long>>& out) {
  if (parts == 1) {
    cur.push_back(c);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long long first = c; first >= 0; --first) {
    cur.push_back(first);
    compositions(c - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

long long composition_count(long long c, int parts) {
  // binomial(c + parts - 1, parts - 1), saturating
  long long r = 1;
  for (int i = 1; i < parts; ++i) {
    r = r * (c + i) / i;
    if (r > (1LL << 40)) return 1LL << 40;
  }
  return r;
}

}  // namespace

PatternFormula compile_counted_pop(const Pop& p, long long c, long long max_terms) {
  const auto ext = linear_extensions(p);
  const int m = static_cast<int>(ext.size());
  if (composition_count(c, m) > max_terms)
    throw error("counted POP expansion exceeds the term cap");
  std::vector<std::vector<long long>> comps;
  std::vector<long long> cur;
  compositions(c, m, cur, comps);
  std::vector<PatternFormula> terms;
  for (const auto& comp : comps) {
    std::vector<PatternFormula> leaves;
    for (int i = 0; i < m; ++i)
      leaves.push_back(PatternFormula::make_leaf(
          compile_classical(ext[static_cast<size_t>(i)].inverse()), comp[static_cast<size_t>(i)]));
    terms.push_back(PatternFormula::conj(std::move(leaves)));
  }
  return PatternFormula::disj(std::move(terms));
}

MeshPattern compile_weak_barred(const BarredPattern& p) {
  if (p.bars() != 1) throw error("expected exactly one bar");
  const Permutation& tp = p.tau_prime;
  const int k = tp.size();
  const int pos = p.bar_positions.front();
  if (pos < 1 || pos > k) throw error("bar position out of range");

  // maximal run of consecutive values through the barred entry, in each sense
  auto run = [&](int dir) {  // dir +1: increasing, -1: decreasing
    int r = pos, s = pos;
    while (r > 1 && tp.at(r - 1) == tp.at(r) - dir) --r;
    while (s < k && tp.at(s + 1) == tp.at(s) + dir) ++s;
    return std::pair<int, int>{r, s};
  };
  auto [ri, si] = run(+1);
  auto [rd, sd] = run(-1);
  const auto [r, s] = (si - ri >= sd - rd) ? std::pair<int, int>{ri, si}
                                           : std::pair<int, int>{rd, sd};
  std::set<Cell> cells;
  for (int i = 0; i <= s - r; ++i) cells.insert({r + i - 1, tp.at(r + i) - 1});
  return MeshPattern(p.reduced(), std::move(cells));
}

PatternFormula compile_dotted(const DottedPattern& p) {
  std::vector<PatternFormula> parts;
  for (int j = 1; j <= p.tau.size(); ++j) {
    if (p.dotted.count(j)) continue;
    parts.push_back(PatternFormula::make_leaf(compile_weak_barred(BarredPattern{p.tau, {j}})));
  }
  return PatternFormula::conj(std::move(parts));
}

Permutation transform(Transform t, const Permutation& tau) {
  switch (t) {
    case Transform::Rev: return tau.reversed();
    case Transform::Cpl: return tau.complemented();
    case Transform::Inv: return tau.inverse();
    case Transform::Rot: return tau.reversed().inverse();
  }
  return tau;
}

MeshPattern transform(Transform t, const MeshPattern& sigma) {
  const int k = sigma.length();
  std::set<Cell> cells;
  for (const auto& [i, j] : sigma.cells) {
    switch (t) {
      case Transform::Rev: cells.insert({k - i, j}); break;
      case Transform::Cpl: cells.insert({i, k - j}); break;
      case Transform::Inv: cells.insert({j, i}); break;
      case Transform::Rot: cells.insert({j, k - i}); break;
    }
  }
  return MeshPattern(transform(t, sigma.tau), std::move(cells));
}

GridAtom transform(Transform t, const GridAtom& g) {
  auto make = [&](int cols, int rows, auto&& src) {
    std::vector<int> m(static_cast<size_t>(cols) * static_cast<size_t>(rows));
    for (int x = 1; x <= cols; ++x)
      for (int y = 1; y <= rows; ++y)
        m[static_cast<size_t>((y - 1) * cols + (x - 1))] = src(x, y);
    return GridAtom(cols, rows, std::move(m), g.kind);
  };
  switch (t) {
    case Transform::Rev:
      return make(g.cols, g.rows, [&](int x, int y) { return -g.at(g.cols + 1 - x, y); });
    case Transform::Cpl:
      return make(g.cols, g.rows, [&](int x, int y) { return -g.at(x, g.rows + 1 - y); });
    case Transform::Inv:
      return make(g.rows, g.cols, [&](int x, int y) { return g.at(y, x); });
    case Transform::Rot:
      return make(g.rows, g.cols, [&](int x, int y) { return -g.at(g.cols + 1 - y, x); });
  }
  return g;
}

PatternFormula transform(Transform t, const PatternFormula& f) {
  PatternFormula out = f;
  switch (f.kind) {
    case PatternFormula::Kind::Leaf:
      out.leaf->pattern = transform(t, f.leaf->pattern);
      break;
    case PatternFormula::Kind::Grid:
      out.grid = transform(t, *f.grid);
      break;
    default:
      for (size_t i = 0; i < f.children.size(); ++i)
        out.children[i] = transform(t, f.children[i]);
  }
  return out;
}

}  // namespace zigzag
