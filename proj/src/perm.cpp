#include "zigzag/perm.hpp"

#include <algorithm>
#include <cctype>

namespace zigzag {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw error("not a permutation of {1..n}: bad entry " + std::to_string(v));
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw error("negative length");
  std::vector<int> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "()" || text.empty()) return Permutation();

  const bool separated =
      text.find(' ') != std::string_view::npos || text.find(',') != std::string_view::npos;
  std::vector<int> e;
  if (separated) {
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) break;
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw error("bad permutation text: " + std::string(text));
      e.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw error("bad permutation text: " + std::string(text));
      e.push_back(c - '0');
    }
    if (e.size() > 9) throw error("contiguous form only valid for n <= 9");
  }
  return Permutation(std::move(e));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) throw error("position out of range");
  return entries_[static_cast<size_t>(pos - 1)];
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[static_cast<size_t>(i)] == value) return i + 1;
  throw error("value not present");
}

Permutation Permutation::insert_largest(int pos) const {
  const int n = size() + 1;
  if (pos < 1 || pos > n) throw error("insertion position out of range");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  e.insert(e.end(), entries_.begin(), entries_.begin() + (pos - 1));
  e.push_back(n);
  e.insert(e.end(), entries_.begin() + (pos - 1), entries_.end());
  return Permutation(std::move(e));
}

Permutation Permutation::remove_largest() const {
  if (empty()) throw error("cannot remove from the empty permutation");
  std::vector<int> e;
  e.reserve(entries_.size() - 1);
  for (int v : entries_)
    if (v != size()) e.push_back(v);
  return Permutation(std::move(e));
}

int Permutation::largest_position() const { return position_of(size()); }

std::vector<int> Permutation::peaks() const {
  std::vector<int> out;
  for (int i = 2; i + 1 <= size(); ++i)
    if (at(i - 1) < at(i) && at(i) > at(i + 1)) out.push_back(i);
  return out;
}

Permutation Permutation::nut() const {
  Permutation cur = *this;
  while (!cur.empty()) {
    const int pos = cur.largest_position();
    if (pos != 1 && pos != cur.size()) break;
    cur = cur.remove_largest();
  }
  return cur;
}

Permutation Permutation::inverse() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < size(); ++i) e[static_cast<size_t>(entries_[static_cast<size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::reversed() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

Permutation Permutation::complemented() const {
  std::vector<int> e;
  e.reserve(entries_.size());
  for (int v : entries_) e.push_back(size() + 1 - v);
  return Permutation(std::move(e));
}

std::string Permutation::str() const {
  if (empty()) return "()";
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(entries_[static_cast<size_t>(i)]);
  }
  return s;
}

std::string JumpStep::str() const {
  return std::to_string(value) + (dir == Direction::Left ? "L" : "R") + std::to_string(steps);
}

Permutation jump(const Permutation& p, int value, Direction dir, int steps) {
  if (steps < 1) throw error("jump needs steps >= 1");
  const int n = p.size();
  const int i = p.position_of(value);
  const int j = dir == Direction::Right ? i + steps : i - steps;
  if (j < 1 || j > n) throw error("jump past the boundary");
  std::vector<int> e = p.entries();
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int q = lo; q <= hi; ++q)
    if (q != i && p.at(q) >= value) throw error("jump over a non-smaller entry");
  if (dir == Direction::Right)
    std::rotate(e.begin() + (i - 1), e.begin() + i, e.begin() + j);
  else
    std::rotate(e.begin() + (j - 1), e.begin() + (i - 1), e.begin() + i);
  return Permutation(std::move(e));
}

int max_jump_steps(const Permutation& p, int value, Direction dir) {
  const int n = p.size();
  const int i = p.position_of(value);
  int s = 0;
  for (;;) {
    const int q = dir == Direction::Right ? i + s + 1 : i - s - 1;
    if (q < 1 || q > n || p.at(q) >= value) break;
    ++s;
  }
  return s;
}

std::optional<Permutation> max_jump(const Permutation& p, int value, Direction dir) {
  const int s = max_jump_steps(p, value, dir);
  if (s == 0) return std::nullopt;
  return jump(p, value, dir, s);
}

InversionTable to_inversion_table(const Permutation& p) {
  const int n = p.size();
  InversionTable t;
  t.counts.assign(static_cast<size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    const int pos = p.position_of(v);
    int c = 0;
    for (int q = pos + 1; q <= n; ++q)
      if (p.at(q) < v) ++c;
    t.counts[static_cast<size_t>(v - 1)] = c;
  }
  return t;
}

Permutation from_inversion_table(const InversionTable& t) {
  const int n = static_cast<int>(t.counts.size());
  for (int v = 1; v <= n; ++v)
    if (t.counts[static_cast<size_t>(v - 1)] < 0 || t.counts[static_cast<size_t>(v - 1)] > v - 1)
      throw error("malformed inversion table");
  // Insert values 1, 2, ..., n. All previously placed entries are smaller,
  // so v goes with exactly counts[v] of them to its right.
  std::vector<int> e;
  for (int v = 1; v <= n; ++v)
    e.insert(e.end() - t.counts[static_cast<size_t>(v - 1)], v);
  return Permutation(std::move(e));
}

}  // namespace zigzag
