#include "zigzag/tame.hpp"

#include <algorithm>

namespace zigzag {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Tame: return "Tame";
    case Verdict::NotTame: return "NotTame";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string TameReport::str() const {
  std::string s = to_string(verdict);
  for (const auto& c : conditions) {
    s += "\n  condition " + c.name + ": " + (c.passed ? "pass" : "fail");
    if (!c.witness.empty()) s += " (" + c.witness + ")";
  }
  if (criterion_incomplete)
    s += "\n  note: criterion is sufficient only; empirical verification may still succeed";
  if (!note.empty()) s += "\n  note: " + note;
  return s;
}

std::string TameReport::json() const {
  std::string s = "{\"verdict\":\"" + to_string(verdict) + "\",\"conditions\":[";
  bool first = true;
  for (const auto& c : conditions) {
    if (!first) s += ",";
    first = false;
    s += "{\"name\":\"" + c.name + "\",\"passed\":" + (c.passed ? "true" : "false") +
         ",\"witness\":\"" + c.witness + "\"}";
  }
  s += "],\"criterion_incomplete\":";
  s += criterion_incomplete ? "true" : "false";
  return s + "}";
}

namespace {

std::string cell_str(int a, int b) {
  return "cell (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

TameReport from_conditions(std::vector<ConditionCheck> conds) {
  TameReport r;
  r.conditions = std::move(conds);
  r.verdict = Verdict::Tame;
  for (const auto& c : r.conditions)
    if (!c.passed) r.verdict = Verdict::NotTame;
  return r;
}

TameReport unknown(std::string why) {
  TameReport r;
  r.verdict = Verdict::Unknown;
  r.note = std::move(why);
  return r;
}

}  // namespace

TameReport check_mesh(const MeshPattern& sigma) {
  const int k = sigma.length();
  if (k < 3) return unknown("criterion requires pattern length >= 3");
  const int i = sigma.tau.position_of(k);
  const auto& C = sigma.cells;
  auto in = [&](int a, int b) { return C.count({a, b}) > 0; };

  ConditionCheck c1{"i", true, ""};
  if (i == 1 || i == k) {
    c1.passed = false;
    c1.witness = "largest value at position " + std::to_string(i);
  }

  ConditionCheck c2{"ii", true, ""};
  for (int a = 0; a <= k && c2.passed; ++a) {
    if (a == i - 1 || a == i) continue;
    if (in(a, k)) {
      c2.passed = false;
      c2.witness = cell_str(a, k);
    }
  }

  // top-left / top-right neighbor conditions, symmetric to each other
  auto side = [&](const char* name, int top, int other) {
    ConditionCheck c{name, true, ""};
    if (!in(top, k)) return c;
    for (int a = 0; a <= k && c.passed; ++a) {
      if (a == top) continue;
      if (in(a, k - 1)) {
        c.passed = false;
        c.witness = cell_str(a, k - 1);
      }
    }
    for (int b = 0; b <= k - 2 && c.passed; ++b) {
      if (in(other, b) && !in(top, b)) {
        c.passed = false;
        c.witness = cell_str(other, b) + " shaded but " + cell_str(top, b) + " not";
      }
    }
    return c;
  };
  const ConditionCheck c3 = side("iii", i - 1, i);
  const ConditionCheck c4 = side("iv", i, i - 1);

  TameReport r = from_conditions({c1, c2, c3, c4});
  if (c1.passed && c2.passed && !(c3.passed && c4.passed)) r.criterion_incomplete = true;
  return r;
}

TameReport check_grid(const GridAtom& g) {
  ConditionCheck tl{"top-left", g.at(1, g.rows) == -1, ""};
  if (!tl.passed) tl.witness = "top-left entry is " + std::to_string(g.at(1, g.rows));
  ConditionCheck tr{"top-right", g.at(g.cols, g.rows) == +1, ""};
  if (!tr.passed) tr.witness = "top-right entry is " + std::to_string(g.at(g.cols, g.rows));
  return from_conditions({tl, tr});
}

TameReport check_formula(const PatternFormula& f) {
  switch (f.kind) {
    case PatternFormula::Kind::Leaf:
      return check_mesh(f.leaf->pattern);
    case PatternFormula::Kind::Grid:
      return check_grid(*f.grid);
    default: {
      bool any_unknown = false;
      TameReport first_unknown;
      for (const auto& c : f.children) {
        TameReport r = check_formula(c);
        if (r.verdict == Verdict::NotTame) return r;
        if (r.verdict == Verdict::Unknown && !any_unknown) {
          any_unknown = true;
          first_unknown = r;
        }
      }
      if (any_unknown) return first_unknown;
      TameReport r;
      r.verdict = Verdict::Tame;
      return r;
    }
  }
}

namespace {

ConditionCheck largest_interior(const Permutation& tau) {
  const int k = tau.size();
  const int pos = tau.position_of(k);
  ConditionCheck c{"largest-value-interior", pos != 1 && pos != k, ""};
  if (!c.passed) c.witness = "largest value at position " + std::to_string(pos);
  return c;
}

}  // namespace

TameReport shortcut_classical(const Permutation& tau) {
  if (tau.size() < 3) return unknown("rule requires pattern length >= 3");
  return from_conditions({largest_interior(tau)});
}

TameReport shortcut_vincular(const VincularPattern& p) {
  const int k = p.tau.size();
  if (k < 3) return unknown("rule requires pattern length >= 3");
  const int pos = p.tau.position_of(k);
  ConditionCheck pair{"largest-in-pair", pos == p.a || pos == p.a + 1, ""};
  if (!pair.passed) pair.witness = "largest value outside the adjacent pair";
  return from_conditions({largest_interior(p.tau), pair});
}

TameReport shortcut_bivincular(const BivincularPattern& p) {
  TameReport base = shortcut_vincular(VincularPattern{p.tau, p.a});
  if (base.verdict == Verdict::Unknown) return base;
  const int k = p.tau.size();
  ConditionCheck row{"no-top-row", p.rows.count(k - 1) == 0, ""};
  if (!row.passed) row.witness = "row " + std::to_string(k - 1) + " constrained";
  base.conditions.push_back(row);
  if (!row.passed) base.verdict = Verdict::NotTame;
  return base;
}

namespace {

// the single-bar rule: tau-minus keeps its largest value interior, and the
// barred entry is smaller than the largest or sits next to the second
// largest entry of the unbarred pattern
TameReport barred_single_rule(const BarredPattern& p, int min_k) {
  const int k = p.tau_prime.size();
  if (k < min_k)
    return unknown("rule requires pattern length >= " + std::to_string(min_k));
  const Permutation tm = p.reduced();
  ConditionCheck interior = largest_interior(tm);
  interior.name = "reduced-largest-interior";

  // position of the largest barred entry
  int barpos = p.bar_positions.front();
  for (int bp : p.bar_positions)
    if (p.tau_prime.at(bp) > p.tau_prime.at(barpos)) barpos = bp;
  const int barval = p.tau_prime.at(barpos);
  const int pos_second = p.tau_prime.position_of(k - 1);
  ConditionCheck bar{"bar-placement",
                     barval < k || std::abs(barpos - pos_second) == 1, ""};
  if (!bar.passed) bar.witness = "largest entry barred away from the second largest";
  return from_conditions({interior, bar});
}

}  // namespace

TameReport shortcut_barred(const BarredPattern& p) {
  if (p.bars() <= 1) return barred_single_rule(p, 4);
  for (size_t i = 0; i < p.bar_positions.size(); ++i)
    for (size_t j = i + 1; j < p.bar_positions.size(); ++j) {
      const int pi_ = p.bar_positions[i], pj = p.bar_positions[j];
      if (std::abs(pi_ - pj) == 1 ||
          std::abs(p.tau_prime.at(pi_) - p.tau_prime.at(pj)) == 1)
        return unknown("barred entries too close; the reduction rule does not apply");
    }
  return barred_single_rule(p, 5);
}

TameReport shortcut_boxed(const BoxedPattern& p) {
  if (p.tau.size() < 3) return unknown("rule requires pattern length >= 3");
  return from_conditions({largest_interior(p.tau)});
}

TameReport shortcut_bruhat(const BruhatPattern& p) {
  if (p.tau.size() < 3) return unknown("rule requires pattern length >= 3");
  return from_conditions({largest_interior(p.tau)});
}

TameReport shortcut_pop(const Pop& p) {
  auto maximal = [&](int x) {
    for (const auto& [a, b] : p.relations)
      if (a == x) return false;
    return true;
  };
  ConditionCheck c{"extreme-labels-not-maximal", !maximal(1) && !maximal(p.k), ""};
  if (!c.passed) c.witness = maximal(1) ? "label 1 is maximal" : "largest label is maximal";
  return from_conditions({c});
}

TameReport shortcut_dotted(const DottedPattern& p) {
  const int k = p.tau.size();
  if (k < 3) return unknown("rule requires pattern length >= 3");
  const ConditionCheck interior = largest_interior(p.tau);

  // longest monotone run of consecutive values through the largest entry
  const int pos = p.tau.position_of(k);
  auto run = [&](int dir) {
    int r = pos, s = pos;
    while (r > 1 && p.tau.at(r - 1) == p.tau.at(r) - dir) --r;
    while (s < k && p.tau.at(s + 1) == p.tau.at(s) + dir) ++s;
    return std::pair<int, int>{r, s};
  };
  auto [ri, si] = run(+1);
  auto [rd, sd] = run(-1);
  const auto [r, s] = (si - ri >= sd - rd) ? std::pair<int, int>{ri, si}
                                           : std::pair<int, int>{rd, sd};
  ConditionCheck dots{"run-dotted", true, ""};
  for (int j = r; j <= s; ++j)
    if (!p.dotted.count(j)) {
      dots.passed = false;
      dots.witness = "position " + std::to_string(j) + " in the run is undotted";
      break;
    }
  return from_conditions({interior, dots});
}

}  // namespace zigzag
