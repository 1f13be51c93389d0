#include "permdeflate/perm_class.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permdeflate/decomposition.hpp"
#include "permdeflate/parallel.hpp"

namespace permdeflate {

PermClass::PermClass(std::vector<Permutation> basis) {
  if (basis.empty()) throw std::invalid_argument("basis must be non-empty");
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  // Sorted by length, so any element contained in another comes first.
  for (const Permutation& candidate : basis) {
    const bool redundant =
        std::any_of(basis_.begin(), basis_.end(), [&](const Permutation& kept) {
          return is_contained(kept, candidate);
        });
    if (!redundant) basis_.push_back(candidate);
  }
}

PermClass PermClass::parse(std::string_view text) {
  std::vector<Permutation> basis;
  std::string buffer(text);
  std::istringstream in(buffer);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t\r\n") == std::string::npos) {
      throw ParseError("empty basis element in '" + buffer + "'");
    }
    basis.push_back(parse_permutation(item));
  }
  if (basis.empty()) throw ParseError("empty basis");
  return PermClass(std::move(basis));
}

std::size_t PermClass::max_basis_length() const {
  std::size_t best = 0;
  for (const Permutation& b : basis_) best = std::max(best, b.size());
  return best;
}

PermClass PermClass::transformed(Symmetry s) const {
  std::vector<Permutation> images;
  images.reserve(basis_.size());
  for (const Permutation& b : basis_) images.push_back(s.apply(b));
  return PermClass(std::move(images));
}

std::string PermClass::to_string() const {
  std::string out = "Av(";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    const Permutation& b = basis_[i];
    const bool compact = b.size() <= 9;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!compact && j) out += ' ';
      out += std::to_string(b[j]);
    }
  }
  return out + ")";
}

std::string PermClass::basis_text() const {
  std::string out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += format_permutation(basis_[i]);
  }
  return out;
}

bool avoids(const Permutation& p, const PermClass& c) {
  return std::none_of(c.basis().begin(), c.basis().end(),
                      [&](const Permutation& b) { return is_contained(b, p); });
}

bool avoids_extension(const Permutation& extension, std::size_t new_pos,
                      const PermClass& c) {
  return std::none_of(c.basis().begin(), c.basis().end(),
                      [&](const Permutation& b) {
                        return is_contained_through(b, extension, new_pos);
                      });
}

ClassEnumerator::ClassEnumerator(PermClass c, std::size_t max_len)
    : class_(std::move(c)), max_len_(max_len) {}

bool ClassEnumerator::next() {
  if (length_ >= max_len_) return false;
  if (length_ == 0) {
    const Permutation one{1};
    level_.clear();
    if (avoids(one, class_)) level_.push_back(one);
    length_ = 1;
    return !level_.empty();
  }
  if (level_.empty()) return false;

  const std::size_t n = length_ + 1;
  std::vector<std::vector<Permutation>> children(level_.size());
  parallel_for(level_.size(), [&](std::size_t i) {
    for (std::size_t pos = 1; pos <= n; ++pos) {
      Permutation child = insert(level_[i], Slot{pos, static_cast<int>(n)});
      if (avoids_extension(child, pos, class_)) {
        children[i].push_back(std::move(child));
      }
    }
  });
  std::vector<Permutation> next_level;
  for (auto& batch : children) {
    for (Permutation& p : batch) next_level.push_back(std::move(p));
  }
  level_ = std::move(next_level);
  length_ = n;
  return !level_.empty();
}

void for_each_level(
    const PermClass& c, std::size_t max_len,
    const std::function<void(std::size_t, const std::vector<Permutation>&)>&
        fn) {
  ClassEnumerator gen(c, max_len);
  while (gen.next()) fn(gen.length(), gen.level());
}

std::vector<Permutation> enumerate_class(const PermClass& c,
                                         std::size_t max_len) {
  std::vector<Permutation> out;
  for_each_level(c, max_len,
                 [&](std::size_t, const std::vector<Permutation>& level) {
                   const auto start = out.size();
                   out.insert(out.end(), level.begin(), level.end());
                   std::sort(out.begin() + start, out.end());
                 });
  return out;
}

std::vector<Permutation> enumerate_simples(const PermClass& c,
                                           std::size_t max_len) {
  std::vector<Permutation> out;
  for_each_level(c, max_len,
                 [&](std::size_t, const std::vector<Permutation>& level) {
                   const auto start = out.size();
                   for (const Permutation& p : level) {
                     if (is_simple(p)) out.push_back(p);
                   }
                   std::sort(out.begin() + start, out.end());
                 });
  return out;
}

std::vector<LengthCount> count_profile(const PermClass& c,
                                       std::size_t max_len) {
  std::vector<LengthCount> out;
  for (std::size_t len = 1; len <= max_len; ++len) out.push_back({len, 0, 0});
  for_each_level(c, max_len,
                 [&](std::size_t len, const std::vector<Permutation>& level) {
                   LengthCount& row = out[len - 1];
                   row.members = level.size();
                   row.simples = static_cast<std::size_t>(
                       std::count_if(level.begin(), level.end(),
                                     [](const Permutation& p) {
                                       return is_simple(p);
                                     }));
                 });
  return out;
}

bool slot_blocked(const Permutation& p, Slot slot, const PermClass& c) {
  return !avoids_extension(insert(p, slot), slot.pos_slot, c);
}

ShadingGrid shading_grid(const Permutation& p, const PermClass& c) {
  if (!avoids(p, c)) {
    throw std::invalid_argument(format_permutation(p) + " is not a member of " +
                                c.to_string());
  }
  const std::size_t side = p.size() + 1;
  std::vector<char> blocked(side * side, 0);
  parallel_for(side * side, [&](std::size_t cell) {
    const Slot slot{cell / side + 1, static_cast<int>(cell % side) + 1};
    blocked[cell] = slot_blocked(p, slot, c) ? 1 : 0;
  });
  ShadingGrid grid{p, {}};
  for (std::size_t cell = 0; cell < blocked.size(); ++cell) {
    if (blocked[cell]) {
      grid.blocked.insert(
          Slot{cell / side + 1, static_cast<int>(cell % side) + 1});
    }
  }
  return grid;
}

std::string render_grid(const ShadingGrid& grid) {
  // Character row/column 2k holds slot k+1; 2k+1 holds entry k+1.
  const std::size_t n = grid.host.size();
  const std::size_t side = 2 * n + 1;
  std::string out;
  for (std::size_t r = side; r-- > 0;) {
    std::string line(side, ' ');
    for (std::size_t col = 0; col < side; ++col) {
      if (r % 2 == 0 && col % 2 == 0) {
        const Slot slot{col / 2 + 1, static_cast<int>(r / 2) + 1};
        line[col] = grid.is_blocked(slot) ? '#' : '.';
      } else if (r % 2 == 1 && col % 2 == 1) {
        const std::size_t pos = col / 2 + 1;
        if (grid.host.value_at(pos) == static_cast<int>(r / 2) + 1) {
          line[col] = 'o';
        }
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace permdeflate
