#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "permdeflate/permutation.hpp"
#include "permdeflate/symmetry.hpp"

namespace permdeflate {

/// Av(B): the permutations avoiding every element of a finite basis.
class PermClass {
 public:
  /// Drops duplicates and any element containing another, so the stored
  /// basis is an antichain. Throws on an empty basis.
  explicit PermClass(std::vector<Permutation> basis);

  /// Comma-separated list, e.g. "321, 2413" or "251364".
  static PermClass parse(std::string_view text);

  const std::vector<Permutation>& basis() const { return basis_; }
  bool is_principal() const { return basis_.size() == 1; }
  std::size_t max_basis_length() const;

  /// Image of the class under a symmetry (applied to every basis element).
  PermClass transformed(Symmetry s) const;

  std::string to_string() const;  // "Av(251364)"
  std::string basis_text() const;  // "2 5 1 3 6 4"

  friend bool operator==(const PermClass&, const PermClass&) = default;

 private:
  std::vector<Permutation> basis_;  // sorted by length, then lexicographically
};

bool avoids(const Permutation& p, const PermClass& c);

/// Membership test for a one-point extension of a known member: only
/// occurrences through the new entry at `new_pos` are searched.
bool avoids_extension(const Permutation& extension, std::size_t new_pos,
                      const PermClass& c);

/// Members of a class, grouped by length (each level in generation order;
/// enumerate_class and enumerate_simples sort within a length). Length n is generated from length
/// n-1 by inserting a new maximum in every position; each member has a
/// unique parent, so nothing is produced twice.
class ClassEnumerator {
 public:
  ClassEnumerator(PermClass c, std::size_t max_len);

  /// Advances to the next length; false once max_len is exhausted or the
  /// class has no members of the next length.
  bool next();
  std::size_t length() const { return length_; }
  const std::vector<Permutation>& level() const { return level_; }

 private:
  PermClass class_;
  std::size_t max_len_;
  std::size_t length_ = 0;
  std::vector<Permutation> level_;
};

/// Visits each length batch in increasing order.
void for_each_level(
    const PermClass& c, std::size_t max_len,
    const std::function<void(std::size_t, const std::vector<Permutation>&)>&
        fn);

std::vector<Permutation> enumerate_class(const PermClass& c,
                                         std::size_t max_len);
std::vector<Permutation> enumerate_simples(const PermClass& c,
                                           std::size_t max_len);

struct LengthCount {
  std::size_t length;
  std::size_t members;
  std::size_t simples;
  friend bool operator==(const LengthCount&, const LengthCount&) = default;
};

std::vector<LengthCount> count_profile(const PermClass& c,
                                       std::size_t max_len);

/// Slots of the (n+1) x (n+1) insertion grid around a member whose use
/// would create a basis element.
struct ShadingGrid {
  Permutation host{1};
  std::set<Slot> blocked;

  bool is_blocked(Slot s) const { return blocked.count(s) != 0; }
};

/// Throws std::invalid_argument when `p` is not a member of `c`.
ShadingGrid shading_grid(const Permutation& p, const PermClass& c);

/// Same test as the grid, for a single slot of a member.
bool slot_blocked(const Permutation& p, Slot slot, const PermClass& c);

/// Rows top (highest value) to bottom: '#' blocked slot, '.' open slot,
/// 'o' an entry of the host.
std::string render_grid(const ShadingGrid& grid);

}  // namespace permdeflate
