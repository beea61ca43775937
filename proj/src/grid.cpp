#include "zigzag/grid.hpp"

#include <vector>

namespace zigzag {

namespace {

// All nondecreasing sequences 0 = c_0 <= c_1 <= ... <= c_t = n of inner
// cut positions (t-1 free cuts).
void cuttings(int n, int parts, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  for (int c = lo; c <= n; ++c) {
    cur.push_back(c);
    cuttings(n, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_cuttings(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  cuttings(n, parts, cur, out);
  return out;
}

int bucket(const std::vector<int>& cuts, int coord) {
  // cuts are inner boundaries; coord in 1..n; returns 1-based bucket
  int b = 1;
  for (int c : cuts) {
    if (coord > c) ++b;
    else break;
  }
  return b;
}

struct Gridding {
  std::vector<int> col;  // per position index 0..n-1: column 1..t
  std::vector<int> row;  // per position index: row 1..u (by value)
};

// Checks the monotone cell conditions for a fixed gridding.
bool monotone_ok(const GridAtom& g, const Permutation& pi, const Gridding& gr) {
  const int n = pi.size();
  for (int x = 1; x <= g.cols; ++x)
    for (int y = 1; y <= g.rows; ++y) {
      const int sign = g.at(x, y);
      int prev = 0;
      for (int i = 0; i < n; ++i) {
        if (gr.col[static_cast<size_t>(i)] != x || gr.row[static_cast<size_t>(i)] != y) continue;
        const int v = pi.entries()[static_cast<size_t>(i)];
        if (sign == 0) return false;
        if (prev != 0) {
          if (sign > 0 && v < prev) return false;
          if (sign < 0 && v > prev) return false;
        }
        prev = v;
      }
    }
  return true;
}

// Geometric feasibility for a fixed gridding. Each point gets an x-offset
// u in (0,1) within its cell; on a +1 diagonal the y-offset equals u, on a
// -1 diagonal it equals 1-u. Points sharing a grid column must have their
// u order match the position order; points sharing a grid row must have
// their y-offset order match the value order. Encoding u_i as node a_i and
// 1-u_i as node b_i turns every constraint into a strict order arc; the
// system is realizable iff the arc digraph (closed under the mirror
// symmetry) is acyclic.
bool geometric_ok(const GridAtom& g, const Permutation& pi, const Gridding& gr) {
  const int n = pi.size();
  for (int i = 0; i < n; ++i)
    if (g.at(gr.col[static_cast<size_t>(i)], gr.row[static_cast<size_t>(i)]) == 0) return false;

  auto node_a = [](int i) { return 2 * i; };
  auto node_b = [](int i) { return 2 * i + 1; };
  std::vector<std::vector<int>> adj(static_cast<size_t>(2 * n));
  auto mirror = [&](int v) { return v ^ 1; };
  auto arc = [&](int from, int to) {
    adj[static_cast<size_t>(from)].push_back(to);
    adj[static_cast<size_t>(mirror(to))].push_back(mirror(from));
  };

  auto sign_of = [&](int i) {
    return g.at(gr.col[static_cast<size_t>(i)], gr.row[static_cast<size_t>(i)]);
  };
  // y-offset node of point i: a_i on a +1 diagonal, b_i on a -1 diagonal
  auto ynode = [&](int i) { return sign_of(i) > 0 ? node_a(i) : node_b(i); };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (gr.col[static_cast<size_t>(i)] == gr.col[static_cast<size_t>(j)])
        arc(node_a(i), node_a(j));  // position i before j, shared x-interval
      if (gr.row[static_cast<size_t>(i)] == gr.row[static_cast<size_t>(j)]) {
        const bool vi_less = pi.entries()[static_cast<size_t>(i)] < pi.entries()[static_cast<size_t>(j)];
        if (vi_less) arc(ynode(i), ynode(j));
        else arc(ynode(j), ynode(i));
      }
    }

  // cycle detection
  std::vector<int> state(static_cast<size_t>(2 * n), 0);
  std::vector<int> stack, it(static_cast<size_t>(2 * n), 0);
  for (int s = 0; s < 2 * n; ++s) {
    if (state[static_cast<size_t>(s)] != 0) continue;
    stack.push_back(s);
    state[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      if (it[static_cast<size_t>(v)] < static_cast<int>(adj[static_cast<size_t>(v)].size())) {
        const int w = adj[static_cast<size_t>(v)][static_cast<size_t>(it[static_cast<size_t>(v)]++)];
        if (state[static_cast<size_t>(w)] == 1) return false;  // back edge
        if (state[static_cast<size_t>(w)] == 0) {
          state[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      } else {
        state[static_cast<size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool member(const GridAtom& g, const Permutation& pi, bool geometric) {
  const int n = pi.size();
  if (n == 0) return true;
  const auto col_cuts = all_cuttings(n, g.cols);
  const auto row_cuts = all_cuttings(n, g.rows);
  Gridding gr;
  gr.col.resize(static_cast<size_t>(n));
  gr.row.resize(static_cast<size_t>(n));
  for (const auto& cc : col_cuts)
    for (const auto& rc : row_cuts) {
      for (int i = 0; i < n; ++i) {
        gr.col[static_cast<size_t>(i)] = bucket(cc, i + 1);
        gr.row[static_cast<size_t>(i)] = bucket(rc, pi.entries()[static_cast<size_t>(i)]);
      }
      if (geometric) {
        if (geometric_ok(g, pi, gr)) return true;
      } else {
        if (monotone_ok(g, pi, gr)) return true;
      }
    }
  return false;
}

}  // namespace

bool grid_contains(const GridAtom& g, const Permutation& pi) {
  return member(g, pi, false);
}

bool geo_contains(const GridAtom& g, const Permutation& pi) {
  return member(g, pi, true);
}

bool atom_contains(const GridAtom& g, const Permutation& pi) {
  return g.kind == GridKind::Geometric ? geo_contains(g, pi) : grid_contains(g, pi);
}

}  // namespace zigzag
