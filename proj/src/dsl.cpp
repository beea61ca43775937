#include "zigzag/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace zigzag {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  DslExpr parse() {
    DslExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view src_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw error("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(src_[start]))))
      fail("expected an integer");
    return std::stoll(std::string(src_.substr(start, pos_ - start)));
  }

  // comma-separated entries; {v} marks a bar, <v> a dot
  void perm_entries(std::vector<int>& vals, std::vector<int>& bar_pos,
                    std::set<int>& dot_pos) {
    for (;;) {
      if (eat('{')) {
        vals.push_back(static_cast<int>(integer()));
        bar_pos.push_back(static_cast<int>(vals.size()));
        expect('}');
      } else if (eat('<')) {
        vals.push_back(static_cast<int>(integer()));
        dot_pos.insert(static_cast<int>(vals.size()));
        expect('>');
      } else {
        vals.push_back(static_cast<int>(integer()));
      }
      if (!eat(',')) return;
    }
  }

  Permutation plain_perm() {
    std::vector<int> vals;
    std::vector<int> bars;
    std::set<int> dots;
    perm_entries(vals, bars, dots);
    if (!bars.empty() || !dots.empty()) fail("marks not allowed here");
    return Permutation(std::move(vals));
  }

  std::set<Cell> cell_set() {
    std::set<Cell> cells;
    while (peek() == '(') {
      expect('(');
      int x = static_cast<int>(integer());
      expect(',');
      int y = static_cast<int>(integer());
      expect(')');
      cells.insert({x, y});
      if (!eat(',')) break;
    }
    return cells;
  }

  std::vector<std::pair<int, int>> pair_list() {
    std::vector<std::pair<int, int>> out;
    while (peek() == '(') {
      expect('(');
      int x = static_cast<int>(integer());
      expect(',');
      int y = static_cast<int>(integer());
      expect(')');
      out.push_back({x, y});
      if (!eat(',')) break;
    }
    return out;
  }

  GridAtom matrix(GridKind kind) {
    std::vector<std::vector<int>> rows_top_down;
    rows_top_down.emplace_back();
    for (;;) {
      rows_top_down.back().push_back(static_cast<int>(integer()));
      if (eat(',')) continue;
      if (eat(';')) {
        rows_top_down.emplace_back();
        continue;
      }
      break;
    }
    const int rows = static_cast<int>(rows_top_down.size());
    const int cols = static_cast<int>(rows_top_down.front().size());
    for (const auto& r : rows_top_down)
      if (static_cast<int>(r.size()) != cols) fail("ragged matrix");
    std::vector<int> m;
    for (int r = rows - 1; r >= 0; --r)  // bottom row first in storage
      for (int v : rows_top_down[static_cast<size_t>(r)]) m.push_back(v);
    return GridAtom(cols, rows, std::move(m), kind);
  }

  DslExpr expr() {
    const std::string name = ident();
    DslExpr e;
    if (name == "all") {
      e.kind = DslExpr::Kind::All;
      return e;
    }
    if (name == "and" || name == "or") {
      e.kind = name == "and" ? DslExpr::Kind::And : DslExpr::Kind::Or;
      expect('(');
      e.children.push_back(expr());
      while (eat(',')) e.children.push_back(expr());
      expect(')');
      return e;
    }
    if (name == "rev" || name == "cpl" || name == "inv" || name == "rot") {
      e.kind = DslExpr::Kind::Trans;
      e.op = name == "rev" ? Transform::Rev
           : name == "cpl" ? Transform::Cpl
           : name == "inv" ? Transform::Inv
                           : Transform::Rot;
      expect('(');
      e.children.push_back(expr());
      expect(')');
      return e;
    }
    if (name == "count") {
      e.kind = DslExpr::Kind::Count;
      expect('(');
      e.children.push_back(expr());
      expect(',');
      e.cap = integer();
      if (e.cap < 0) fail("count must be non-negative");
      expect(')');
      return e;
    }
    expect('(');
    if (name == "cl" || name == "box") {
      e.kind = name == "cl" ? DslExpr::Kind::Cl : DslExpr::Kind::Box;
      e.perm = plain_perm();
    } else if (name == "vinc") {
      e.kind = DslExpr::Kind::Vinc;
      e.perm = plain_perm();
      expect(';');
      e.a = static_cast<int>(integer());
    } else if (name == "bivinc") {
      e.kind = DslExpr::Kind::Bivinc;
      e.perm = plain_perm();
      expect(';');
      e.a = static_cast<int>(integer());
      expect(';');
      while (peek() != ')') {
        e.marks.insert(static_cast<int>(integer()));
        if (!eat(',')) break;
      }
    } else if (name == "bar" || name == "weakbar") {
      e.kind = name == "bar" ? DslExpr::Kind::Bar : DslExpr::Kind::WeakBar;
      std::vector<int> vals;
      std::set<int> dots;
      perm_entries(vals, e.bars, dots);
      if (!dots.empty()) fail("dots not allowed in a barred pattern");
      if (e.bars.empty()) fail("barred pattern needs at least one bar");
      e.perm = Permutation(std::move(vals));
    } else if (name == "dot") {
      e.kind = DslExpr::Kind::Dot;
      std::vector<int> vals, bars;
      perm_entries(vals, bars, e.marks);
      if (!bars.empty()) fail("bars not allowed in a dotted pattern");
      e.perm = Permutation(std::move(vals));
    } else if (name == "bruhat") {
      e.kind = DslExpr::Kind::Bruhat;
      e.perm = plain_perm();
      expect(';');
      e.pairs = pair_list();
    } else if (name == "mesh") {
      e.kind = DslExpr::Kind::Mesh;
      e.perm = plain_perm();
      expect(';');
      e.cells = cell_set();
    } else if (name == "pop") {
      e.kind = DslExpr::Kind::Pop;
      const int k = static_cast<int>(integer());
      expect(';');
      std::set<std::pair<int, int>> rels;
      while (peek() != ')') {
        int x = static_cast<int>(integer());
        expect('<');
        int y = static_cast<int>(integer());
        rels.insert({x, y});
        if (!eat(',')) break;
      }
      e.pop = Pop(k, std::move(rels));
    } else if (name == "grid" || name == "geo") {
      e.kind = DslExpr::Kind::Grid;
      e.grid = matrix(name == "grid" ? GridKind::Monotone : GridKind::Geometric);
    } else {
      fail("unknown construct '" + name + "'");
    }
    expect(')');
    return e;
  }
};

std::string perm_text(const Permutation& p, const std::vector<int>& bars,
                      const std::set<int>& dots) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) s += ",";
    const bool barred = std::find(bars.begin(), bars.end(), i) != bars.end();
    if (barred) s += "{";
    if (dots.count(i)) s += "<";
    s += std::to_string(p.at(i));
    if (dots.count(i)) s += ">";
    if (barred) s += "}";
  }
  return s;
}

std::string transform_name(Transform t) {
  switch (t) {
    case Transform::Rev: return "rev";
    case Transform::Cpl: return "cpl";
    case Transform::Inv: return "inv";
    case Transform::Rot: return "rot";
  }
  return "?";
}

}  // namespace

DslExpr parse_dsl(std::string_view src) { return Parser(src).parse(); }

std::string emit_dsl(const DslExpr& e) {
  auto join = [](const std::vector<DslExpr>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += emit_dsl(parts[i]);
    }
    return s;
  };
  switch (e.kind) {
    case DslExpr::Kind::All: return "all";
    case DslExpr::Kind::And: return "and(" + join(e.children) + ")";
    case DslExpr::Kind::Or: return "or(" + join(e.children) + ")";
    case DslExpr::Kind::Trans:
      return transform_name(e.op) + "(" + emit_dsl(e.children.front()) + ")";
    case DslExpr::Kind::Count:
      return "count(" + emit_dsl(e.children.front()) + "," + std::to_string(e.cap) + ")";
    case DslExpr::Kind::Cl: return "cl(" + perm_text(e.perm, {}, {}) + ")";
    case DslExpr::Kind::Box: return "box(" + perm_text(e.perm, {}, {}) + ")";
    case DslExpr::Kind::Vinc:
      return "vinc(" + perm_text(e.perm, {}, {}) + ";" + std::to_string(e.a) + ")";
    case DslExpr::Kind::Bivinc: {
      std::string s = "bivinc(" + perm_text(e.perm, {}, {}) + ";" + std::to_string(e.a) + ";";
      bool first = true;
      for (int b : e.marks) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(b);
      }
      return s + ")";
    }
    case DslExpr::Kind::Bar: return "bar(" + perm_text(e.perm, e.bars, {}) + ")";
    case DslExpr::Kind::WeakBar: return "weakbar(" + perm_text(e.perm, e.bars, {}) + ")";
    case DslExpr::Kind::Dot: return "dot(" + perm_text(e.perm, {}, e.marks) + ")";
    case DslExpr::Kind::Bruhat: {
      std::string s = "bruhat(" + perm_text(e.perm, {}, {}) + ";";
      for (size_t i = 0; i < e.pairs.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(e.pairs[i].first) + "," +
             std::to_string(e.pairs[i].second) + ")";
      }
      return s + ")";
    }
    case DslExpr::Kind::Mesh: {
      std::string s = "mesh(" + perm_text(e.perm, {}, {}) + ";";
      bool first = true;
      for (const auto& [x, y] : e.cells) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      return s + ")";
    }
    case DslExpr::Kind::Pop: {
      std::string s = "pop(" + std::to_string(e.pop.k) + ";";
      bool first = true;
      for (const auto& [x, y] : e.pop.relations) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(x) + "<" + std::to_string(y);
      }
      return s + ")";
    }
    case DslExpr::Kind::Grid: {
      const GridAtom& g = *e.grid;
      std::string s = (g.kind == GridKind::Monotone ? "grid(" : "geo(");
      for (int r = g.rows; r >= 1; --r) {  // emit rows top to bottom
        if (r != g.rows) s += ";";
        for (int c = 1; c <= g.cols; ++c) {
          if (c > 1) s += ",";
          s += std::to_string(g.at(c, r));
        }
      }
      return s + ")";
    }
  }
  return "?";
}

PatternFormula compile(const DslExpr& e) {
  switch (e.kind) {
    case DslExpr::Kind::All: return PatternFormula::all();
    case DslExpr::Kind::And: {
      std::vector<PatternFormula> parts;
      for (const auto& c : e.children) parts.push_back(compile(c));
      return PatternFormula::conj(std::move(parts));
    }
    case DslExpr::Kind::Or: {
      std::vector<PatternFormula> parts;
      for (const auto& c : e.children) parts.push_back(compile(c));
      return PatternFormula::disj(std::move(parts));
    }
    case DslExpr::Kind::Trans:
      return transform(e.op, compile(e.children.front()));
    case DslExpr::Kind::Count: {
      const DslExpr& inner = e.children.front();
      if (inner.kind == DslExpr::Kind::Pop)
        return compile_counted_pop(inner.pop, e.cap);
      PatternFormula f = compile(inner);
      if (f.kind != PatternFormula::Kind::Leaf)
        throw error("count applies to single-pattern terms only");
      f.leaf->cap = e.cap;
      return f;
    }
    case DslExpr::Kind::Cl:
      return PatternFormula::make_leaf(compile_classical(e.perm));
    case DslExpr::Kind::Vinc:
      return PatternFormula::make_leaf(compile_vincular({e.perm, e.a}));
    case DslExpr::Kind::Bivinc:
      return PatternFormula::make_leaf(compile_bivincular({e.perm, e.a, e.marks}));
    case DslExpr::Kind::Bar: {
      BarredPattern p{e.perm, e.bars};
      if (p.bars() == 1)
        return PatternFormula::make_leaf(compile_barred_single(p));
      return compile_barred_multi(p);
    }
    case DslExpr::Kind::WeakBar:
      return PatternFormula::make_leaf(compile_weak_barred({e.perm, e.bars}));
    case DslExpr::Kind::Box:
      return PatternFormula::make_leaf(compile_boxed({e.perm}));
    case DslExpr::Kind::Bruhat:
      return PatternFormula::make_leaf(compile_bruhat({e.perm, e.pairs}));
    case DslExpr::Kind::Mesh:
      return PatternFormula::make_leaf(MeshPattern(e.perm, e.cells));
    case DslExpr::Kind::Pop: return compile_pop(e.pop);
    case DslExpr::Kind::Dot: return compile_dotted({e.perm, e.marks});
    case DslExpr::Kind::Grid: return PatternFormula::make_grid(*e.grid);
  }
  throw error("unreachable");
}

namespace {

DslExpr from_formula(const PatternFormula& f) {
  DslExpr e;
  switch (f.kind) {
    case PatternFormula::Kind::And:
      if (f.children.empty()) {
        e.kind = DslExpr::Kind::All;
        return e;
      }
      e.kind = DslExpr::Kind::And;
      for (const auto& c : f.children) e.children.push_back(from_formula(c));
      return e;
    case PatternFormula::Kind::Or:
      e.kind = DslExpr::Kind::Or;
      for (const auto& c : f.children) e.children.push_back(from_formula(c));
      return e;
    case PatternFormula::Kind::Grid:
      e.kind = DslExpr::Kind::Grid;
      e.grid = f.grid;
      return e;
    case PatternFormula::Kind::Leaf: {
      DslExpr m;
      m.kind = DslExpr::Kind::Mesh;
      m.perm = f.leaf->pattern.tau;
      m.cells = f.leaf->pattern.cells;
      if (f.leaf->cap == 0) return m;
      e.kind = DslExpr::Kind::Count;
      e.cap = f.leaf->cap;
      e.children.push_back(std::move(m));
      return e;
    }
  }
  throw error("unreachable");
}

DslExpr lower(const DslExpr& e) { return from_formula(compile(e)); }

// bar positions under rev/cpl/inv on the underlying permutation
std::vector<int> map_bars(Transform t, const Permutation& p,
                          const std::vector<int>& bars) {
  std::vector<int> out;
  for (int b : bars) {
    switch (t) {
      case Transform::Rev: out.push_back(p.size() + 1 - b); break;
      case Transform::Cpl: out.push_back(b); break;
      case Transform::Inv: out.push_back(p.at(b)); break;
      default: throw error("unsupported bar transform");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DslExpr transform_expr(Transform t, const DslExpr& e) {
  DslExpr out = e;
  switch (e.kind) {
    case DslExpr::Kind::All:
      return out;
    case DslExpr::Kind::And:
    case DslExpr::Kind::Or:
      for (auto& c : out.children) c = transform_expr(t, c);
      return out;
    case DslExpr::Kind::Trans:
      return transform_expr(t, resolve_transforms(e));
    case DslExpr::Kind::Count:
      if (e.children.front().kind == DslExpr::Kind::Pop)
        return transform_expr(t, lower(e));
      out.children.front() = transform_expr(t, e.children.front());
      return out;
    case DslExpr::Kind::Cl:
    case DslExpr::Kind::Box:
      out.perm = transform(t, e.perm);
      return out;
    case DslExpr::Kind::Mesh: {
      const MeshPattern m = transform(t, MeshPattern(e.perm, e.cells));
      out.perm = m.tau;
      out.cells = m.cells;
      return out;
    }
    case DslExpr::Kind::Grid:
      out.grid = transform(t, *e.grid);
      return out;
    case DslExpr::Kind::Vinc:
      if (t == Transform::Rev) {
        out.perm = e.perm.reversed();
        out.a = e.perm.size() - e.a;
        return out;
      }
      if (t == Transform::Cpl) {
        out.perm = e.perm.complemented();
        return out;
      }
      return transform_expr(t, lower(e));
    case DslExpr::Kind::Bivinc:
      if (t == Transform::Rev) {
        out.perm = e.perm.reversed();
        out.a = e.perm.size() - e.a;
        return out;
      }
      if (t == Transform::Cpl) {
        out.perm = e.perm.complemented();
        out.marks.clear();
        for (int b : e.marks) out.marks.insert(e.perm.size() - b);
        return out;
      }
      return transform_expr(t, lower(e));
    case DslExpr::Kind::Bar:
    case DslExpr::Kind::WeakBar:
    case DslExpr::Kind::Dot: {
      if (t == Transform::Rot)
        return transform_expr(Transform::Inv, transform_expr(Transform::Rev, e));
      if (e.kind == DslExpr::Kind::Dot) {
        std::set<int> marks;
        for (int j : e.marks) {
          switch (t) {
            case Transform::Rev: marks.insert(e.perm.size() + 1 - j); break;
            case Transform::Cpl: marks.insert(j); break;
            default: marks.insert(e.perm.at(j)); break;
          }
        }
        out.marks = std::move(marks);
      } else {
        out.bars = map_bars(t, e.perm, e.bars);
      }
      out.perm = transform(t, e.perm);
      return out;
    }
    case DslExpr::Kind::Bruhat:
      if (t == Transform::Inv) {
        out.perm = e.perm.inverse();
        for (auto& [a, b] : out.pairs) {
          a = e.perm.at(a);
          b = e.perm.at(b);
        }
        return out;
      }
      return transform_expr(t, lower(e));
    case DslExpr::Kind::Pop:
      return transform_expr(t, lower(e));
  }
  throw error("unreachable");
}

DslExpr resolve_transforms(const DslExpr& e) {
  if (e.kind == DslExpr::Kind::Trans)
    return transform_expr(e.op, resolve_transforms(e.children.front()));
  DslExpr out = e;
  for (auto& c : out.children) c = resolve_transforms(c);
  return out;
}

}  // namespace zigzag
