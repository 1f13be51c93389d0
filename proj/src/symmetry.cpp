#include "permdeflate/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

namespace permdeflate {

namespace {

struct Encoding {
  bool transpose;
  bool mirror_x;
  bool mirror_y;
};

constexpr Encoding encode(Symmetry::Name name) {
  switch (name) {
    case Symmetry::Name::identity: return {false, false, false};
    case Symmetry::Name::r: return {true, true, false};
    case Symmetry::Name::r2: return {false, true, true};
    case Symmetry::Name::r3: return {true, false, true};
    case Symmetry::Name::reverse: return {false, true, false};
    case Symmetry::Name::complement: return {false, false, true};
    case Symmetry::Name::inverse: return {true, false, false};
    case Symmetry::Name::antidiagonal: return {true, true, true};
  }
  return {false, false, false};
}

Symmetry::Name decode(Encoding e) {
  for (Symmetry::Name name : Symmetry::kAll) {
    const Encoding c = encode(name);
    if (c.transpose == e.transpose && c.mirror_x == e.mirror_x &&
        c.mirror_y == e.mirror_y) {
      return name;
    }
  }
  return Symmetry::Name::identity;
}

// Signed 2x2 permutation matrix acting on centred coordinates.
struct Matrix {
  int m[2][2];
};

Matrix to_matrix(Encoding e) {
  Matrix t = e.transpose ? Matrix{{{0, 1}, {1, 0}}} : Matrix{{{1, 0}, {0, 1}}};
  const int sx = e.mirror_x ? -1 : 1;
  const int sy = e.mirror_y ? -1 : 1;
  for (int c = 0; c < 2; ++c) {
    t.m[0][c] *= sx;
    t.m[1][c] *= sy;
  }
  return t;
}

Encoding from_matrix(const Matrix& m) {
  if (m.m[0][1] == 0) return {false, m.m[0][0] < 0, m.m[1][1] < 0};
  return {true, m.m[0][1] < 0, m.m[1][0] < 0};
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

std::array<Symmetry, 8> Symmetry::all() {
  std::array<Symmetry, 8> out;
  for (std::size_t i = 0; i < kAll.size(); ++i) out[i] = Symmetry(kAll[i]);
  return out;
}

Symmetry Symmetry::parse(std::string_view text) {
  static const std::map<std::string, Name> kAliases = {
      {"identity", Name::identity},
      {"id", Name::identity},
      {"e", Name::identity},
      {"r", Name::r},
      {"rot90", Name::r},
      {"reverse∘inverse", Name::r},
      {"reverse-inverse", Name::r},
      {"ri", Name::r},
      {"r2", Name::r2},
      {"r²", Name::r2},
      {"rot180", Name::r2},
      {"reverse∘complement", Name::r2},
      {"reverse-complement", Name::r2},
      {"rc", Name::r2},
      {"r3", Name::r3},
      {"r³", Name::r3},
      {"rot270", Name::r3},
      {"inverse∘reverse", Name::r3},
      {"reverse", Name::reverse},
      {"rev", Name::reverse},
      {"complement", Name::complement},
      {"comp", Name::complement},
      {"c", Name::complement},
      {"inverse", Name::inverse},
      {"inv", Name::inverse},
      {"i", Name::inverse},
      {"antidiagonal", Name::antidiagonal},
      {"reverse∘complement∘inverse", Name::antidiagonal},
      {"rci", Name::antidiagonal},
  };
  auto it = kAliases.find(lowercase(text));
  if (it == kAliases.end()) {
    throw ParseError("unknown symmetry '" + std::string(text) + "'");
  }
  return Symmetry(it->second);
}

std::string_view Symmetry::to_string() const {
  switch (name_) {
    case Name::identity: return "identity";
    case Name::r: return "r";
    case Name::r2: return "r2";
    case Name::r3: return "r3";
    case Name::reverse: return "reverse";
    case Name::complement: return "complement";
    case Name::inverse: return "inverse";
    case Name::antidiagonal: return "antidiagonal";
  }
  return "identity";
}

bool Symmetry::transposes() const { return encode(name_).transpose; }
bool Symmetry::mirrors_positions() const { return encode(name_).mirror_x; }
bool Symmetry::mirrors_values() const { return encode(name_).mirror_y; }

Symmetry Symmetry::compose(Symmetry other) const {
  const Matrix a = to_matrix(encode(name_));
  const Matrix b = to_matrix(encode(other.name_));
  Matrix product{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      product.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    }
  }
  return Symmetry(decode(from_matrix(product)));
}

Symmetry Symmetry::inverted() const {
  for (Name candidate : kAll) {
    if (compose(Symmetry(candidate)) == Symmetry()) return Symmetry(candidate);
  }
  return *this;
}

Permutation Symmetry::apply(const Permutation& p) const {
  const Encoding e = encode(name_);
  const int n = static_cast<int>(p.size());
  std::vector<int> v = e.transpose ? p.inverse().to_vector() : p.to_vector();
  if (e.mirror_x) std::reverse(v.begin(), v.end());
  if (e.mirror_y) {
    for (int& x : v) x = n + 1 - x;
  }
  return Permutation(std::move(v));
}

Slot Symmetry::apply(Slot slot, std::size_t n) const {
  const Encoding e = encode(name_);
  const int edge = static_cast<int>(n) + 2;
  int x = static_cast<int>(slot.pos_slot);
  int y = slot.val_slot;
  if (e.transpose) std::swap(x, y);
  if (e.mirror_x) x = edge - x;
  if (e.mirror_y) y = edge - y;
  return Slot{static_cast<std::size_t>(x), y};
}

Permutation reverse(const Permutation& p) {
  return Symmetry(Symmetry::Name::reverse).apply(p);
}

Permutation complement(const Permutation& p) {
  return Symmetry(Symmetry::Name::complement).apply(p);
}

}  // namespace permdeflate
