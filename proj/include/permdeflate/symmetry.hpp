#pragma once

#include <array>
#include <string>
#include <string_view>

#include "permdeflate/permutation.hpp"

namespace permdeflate {

/// One of the eight symmetries of the square acting on permutation diagrams.
///
/// Stored as "transpose, then mirror positions, then mirror values"; every
/// element of the dihedral group has exactly one such encoding.
class Symmetry {
 public:
  enum class Name {
    identity,
    r,       // rotate 90 degrees counterclockwise
    r2,
    r3,
    reverse,
    complement,
    inverse,
    antidiagonal,  // reflection in the anti-diagonal
  };

  constexpr Symmetry() = default;
  constexpr explicit Symmetry(Name name) : name_(name) {}

  static constexpr std::array<Name, 8> kAll = {
      Name::identity, Name::r,          Name::r2,      Name::r3,
      Name::reverse,  Name::complement, Name::inverse, Name::antidiagonal};

  static std::array<Symmetry, 8> all();

  /// Accepts canonical names plus aliases such as "rc", "rot180", "i",
  /// "reverse∘inverse".
  static Symmetry parse(std::string_view text);

  constexpr Name name() const { return name_; }
  std::string_view to_string() const;

  bool transposes() const;
  bool mirrors_positions() const;
  bool mirrors_values() const;

  /// `(*this) ∘ other`: apply `other` first.
  Symmetry compose(Symmetry other) const;
  Symmetry inverted() const;

  Permutation apply(const Permutation& p) const;
  /// Image of an insertion slot of a length-n permutation.
  Slot apply(Slot slot, std::size_t n) const;

  friend constexpr bool operator==(Symmetry, Symmetry) = default;

 private:
  Name name_ = Name::identity;
};

inline Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  return s.apply(p);
}

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

}  // namespace permdeflate
