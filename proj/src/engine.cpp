#include "zigzag/engine.hpp"

#include <algorithm>
#include <unordered_set>

namespace zigzag {

std::optional<Permutation> minimal_jump(const Permutation& p, int value,
                                        Direction dir,
                                        const LanguageOracle& oracle) {
  const int max = max_jump_steps(p, value, dir);
  for (int s = 1; s <= max; ++s) {
    Permutation q = jump(p, value, dir, s);
    if (oracle.contains(q)) return q;
  }
  return std::nullopt;
}

GenResult generate_greedy(const LanguageOracle& oracle, int n,
                          const Permutation& seed,
                          std::optional<long long> limit) {
  if (seed.size() != n || !oracle.contains(seed))
    throw error("seed is not a member of the language");

  GenResult res;
  std::unordered_set<Permutation> visited;
  res.sequence.push_back(seed);
  visited.insert(seed);

  bool running = true;
  while (running &&
         (!limit || static_cast<long long>(res.sequence.size()) < *limit)) {
    const Permutation& cur = res.sequence.back();
    running = false;
    for (int value = n; value >= 2; --value) {
      auto left = minimal_jump(cur, value, Direction::Left, oracle);
      if (left && visited.count(*left)) left.reset();
      auto right = minimal_jump(cur, value, Direction::Right, oracle);
      if (right && visited.count(*right)) right.reset();
      if (!left && !right) continue;
      if (left && right) {
        res.status = GenStatus::StalledAmbiguous;
        res.visited_count = static_cast<long long>(visited.size());
        return res;
      }
      Permutation next = left ? *left : *right;
      visited.insert(next);
      res.sequence.push_back(std::move(next));
      running = true;
      break;
    }
  }

  res.visited_count = static_cast<long long>(visited.size());
  long long total = 0;
  for (const auto& p : enumerate_language(oracle, n)) {
    (void)p;
    ++total;
  }
  res.status = res.visited_count == total ? GenStatus::Complete
                                          : GenStatus::StalledNoJump;
  return res;
}

OrderedGenerator::OrderedGenerator(const LanguageOracle& oracle, int n)
    : oracle_(oracle), n_(n), current_(Permutation::identity(n)),
      dir_(static_cast<size_t>(n) + 1, Direction::Left) {
  if (n < 0 || n > oracle.max_length()) throw error("length outside oracle range");
}

std::optional<Permutation> OrderedGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ == 0) {
      done_ = true;
      return Permutation();
    }
    return current_;
  }
  // Advance the deepest level that can still move in its sweep direction;
  // all deeper levels have exhausted their sweeps and turn around.
  for (int m = n_; m >= 2; --m) {
    const Direction d = dir_[static_cast<size_t>(m)];
    const int before = current_.position_of(m);
    if (auto q = minimal_jump(current_, m, d, oracle_)) {
      const int after = q->position_of(m);
      last_jump_ = JumpStep{m, d, std::abs(after - before)};
      current_ = std::move(*q);
      for (int deeper = m + 1; deeper <= n_; ++deeper)
        dir_[static_cast<size_t>(deeper)] =
            opposite(dir_[static_cast<size_t>(deeper)]);
      return current_;
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Permutation> generate_ordered(const LanguageOracle& oracle, int n) {
  OrderedGenerator gen(oracle, n);
  std::vector<Permutation> out;
  while (auto p = gen.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Permutation> enumerate_language(const LanguageOracle& oracle, int m) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = i + 1;
  do {
    Permutation p(v);
    if (oracle.contains(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool is_cyclic(const LanguageOracle& oracle, int n) {
  for (int i = 2; i <= n - 1; ++i)
    if (enumerate_language(oracle, i).size() % 2 != 0) return false;
  return true;
}

std::vector<Permutation> seeds(const LanguageOracle& oracle, int n) {
  std::vector<Permutation> out;
  for (auto& p : enumerate_language(oracle, n))
    if (p.peak_free()) out.push_back(std::move(p));
  return out;
}

}  // namespace zigzag
