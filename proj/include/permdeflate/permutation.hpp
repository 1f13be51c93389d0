#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdeflate {

/// Raised for malformed permutation text or symmetry names.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxLength = 4096;

/// A permutation of {1..n} in one-line notation, n >= 1.
///
/// Positions and values are 1-based throughout the public API; `operator[]`
/// is the only 0-based accessor and exists for tight loops.
class Permutation {
 public:
  /// Validates that `values` is a rearrangement of 1..n with 1 <= n <= 4096.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(std::size_t n);

  /// Ranks arbitrary distinct keys into a permutation (order-isomorphic).
  template <typename Key>
  static Permutation standardize(std::span<const Key> keys);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t index) const { return values_[index]; }
  int value_at(std::size_t pos) const { return values_.at(pos - 1); }
  /// 1-based position holding `value`.
  std::size_t position_of(int value) const;

  std::span<const int> values() const { return values_; }
  std::vector<int> to_vector() const { return values_; }
  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  std::vector<int> values_;
};

/// Parses whitespace-separated decimal values, or a compact digit string
/// ("25173486") when every value is a single digit.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// Positions (1-based, strictly increasing) of an occurrence in a host.
struct Occurrence {
  std::vector<std::size_t> positions;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Returns the position-lexicographically least occurrence of `pattern` in
/// `host`, if any.
std::optional<Occurrence> contains(const Permutation& pattern,
                                   const Permutation& host);
bool is_contained(const Permutation& pattern, const Permutation& host);

/// Same, but only occurrences using the entry at 1-based `anchor_pos` count.
/// When the host minus that entry avoids `pattern` this is equivalent to
/// `is_contained` and much cheaper.
bool is_contained_through(const Permutation& pattern, const Permutation& host,
                          std::size_t anchor_pos);

/// Insertion coordinates for a one-point extension. The new entry goes
/// immediately before position `pos_slot` (n+1 means at the end) and takes
/// value `val_slot`; existing values >= val_slot shift up by one.
struct Slot {
  std::size_t pos_slot = 1;
  int val_slot = 1;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

Permutation insert(const Permutation& p, Slot slot);
/// Removes the entry at 1-based `pos` and re-standardizes. Requires n >= 2.
Permutation remove_entry(const Permutation& p, std::size_t pos);

enum class BondKind { increasing, decreasing };

struct Bond {
  std::size_t left_pos = 1;
  BondKind kind = BondKind::increasing;
  int low_value = 1;
  friend bool operator==(const Bond&, const Bond&) = default;
};

std::vector<Bond> bonds(const Permutation& p);

/// alpha[parts_1, ..., parts_k]
Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> parts);

enum class SumKind { direct, skew };

/// direct: 12[a, b]; skew: 21[a, b].
Permutation sum(const Permutation& a, const Permutation& b, SumKind kind);
Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Visits every permutation of length n in lexicographic order.
void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(std::size_t n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

template <typename Key>
Permutation Permutation::standardize(std::span<const Key> keys) {
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<int> values(keys.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    values[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(values));
}

}  // namespace permdeflate

template <>
struct std::hash<permdeflate::Permutation> : permdeflate::PermutationHash {};
