#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zigzag {

/// Thrown on invalid constructions and violated preconditions.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { Left, Right };

inline Direction opposite(Direction d) {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

/// A permutation of {1,...,n} in one-line notation. Immutable value type;
/// positions and values are 1-based on the public surface. n = 0 is the
/// empty permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Accepts "2 6 5 1 3 4", "2,6,5,1,3,4", contiguous digits "265134"
  /// (n <= 9 only), and "()" for the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  int at(int pos) const;           // value at position pos (1-based)
  int position_of(int value) const;

  const std::vector<int>& entries() const { return entries_; }

  /// c_i: insert the new largest value n at position i (1 <= i <= n).
  Permutation insert_largest(int pos) const;
  /// p: remove the largest value. Error on the empty permutation.
  Permutation remove_largest() const;
  int largest_position() const;    // position of value n

  /// Positions i with a_{i-1} < a_i > a_{i+1}, in increasing order.
  std::vector<int> peaks() const;
  bool peak_free() const { return peaks().empty(); }

  /// Repeatedly remove the largest value while it is at the leftmost or
  /// rightmost position.
  Permutation nut() const;

  Permutation inverse() const;
  Permutation reversed() const;
  Permutation complemented() const;

  /// Values separated by single spaces; "()" for the empty permutation.
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// One Gray-code transition: value jumps `steps` positions in `dir`.
struct JumpStep {
  int value = 0;
  Direction dir = Direction::Left;
  int steps = 0;

  bool operator==(const JumpStep&) const = default;
  std::string str() const;
};

/// counts[v-1] = number of entries smaller than v to the right of v.
/// A jump of value v by s steps changes exactly this entry by +-s
/// (+s for a left jump, -s for a right jump).
struct InversionTable {
  std::vector<int> counts;

  bool operator==(const InversionTable&) const = default;
};

/// Right jump: the value moves `steps` positions right past strictly
/// smaller entries (cyclic left rotation of that substring); symmetric
/// for left jumps. Errors if a skipped entry is not smaller or the jump
/// would leave the permutation.
Permutation jump(const Permutation& p, int value, Direction dir, int steps);

/// Jump with the largest feasible step count; nullopt if no step is feasible.
std::optional<Permutation> max_jump(const Permutation& p, int value,
                                    Direction dir);

/// Largest feasible step count for a jump of `value` in `dir` (0 if none).
int max_jump_steps(const Permutation& p, int value, Direction dir);

InversionTable to_inversion_table(const Permutation& p);
Permutation from_inversion_table(const InversionTable& t);

}  // namespace zigzag

template <>
struct std::hash<zigzag::Permutation> {
  size_t operator()(const zigzag::Permutation& p) const noexcept {
    size_t h = p.size();
    for (int v : p.entries()) h = h * 1000003u + static_cast<size_t>(v);
    return h;
  }
};
