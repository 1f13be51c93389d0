#include "permdeflate/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permdeflate {

namespace {

void validate_values(std::span<const int> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("permutation must be non-empty");
  if (n > kMaxLength) {
    throw std::invalid_argument("permutation length " + std::to_string(n) +
                                " exceeds maximum " +
                                std::to_string(kMaxLength));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("repeated value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

// For each pattern index j, the earlier pattern index whose value is the
// nearest below (resp. above) pattern[j], or -1.
struct MatchPlan {
  std::vector<int> lower;
  std::vector<int> upper;
};

MatchPlan make_plan(const Permutation& pattern) {
  const std::size_t k = pattern.size();
  MatchPlan plan{std::vector<int>(k, -1), std::vector<int>(k, -1)};
  for (std::size_t j = 0; j < k; ++j) {
    int best_lo = 0;
    int best_hi = static_cast<int>(k) + 1;
    for (std::size_t i = 0; i < j; ++i) {
      const int v = pattern[i];
      if (v < pattern[j] && v > best_lo) {
        best_lo = v;
        plan.lower[j] = static_cast<int>(i);
      }
      if (v > pattern[j] && v < best_hi) {
        best_hi = v;
        plan.upper[j] = static_cast<int>(i);
      }
    }
  }
  return plan;
}

constexpr std::size_t kNoAnchor = static_cast<std::size_t>(-1);

// Backtracking matcher: pattern entries are assigned to host positions left
// to right, each constrained to the value window between its already-matched
// nearest neighbours in value. Visiting host positions in increasing order
// makes the first complete match the lexicographically least occurrence.
class Matcher {
 public:
  Matcher(const Permutation& pattern, const Permutation& host,
          std::size_t anchor)
      : plan_(make_plan(pattern)),
        host_(host.values()),
        k_(pattern.size()),
        n_(host.size()),
        anchor_(anchor),
        match_(pattern.size()) {}

  bool run() {
    if (k_ > n_) return false;
    return search(0, 0, anchor_ == kNoAnchor);
  }

  Occurrence occurrence() const {
    Occurrence occ;
    occ.positions.reserve(k_);
    for (std::size_t pos : match_) occ.positions.push_back(pos + 1);
    return occ;
  }

 private:
  bool search(std::size_t j, std::size_t start, bool anchor_used) {
    if (j == k_) return anchor_used;
    const int lo = plan_.lower[j] >= 0 ? host_[match_[plan_.lower[j]]] : 0;
    const int hi = plan_.upper[j] >= 0 ? host_[match_[plan_.upper[j]]]
                                       : static_cast<int>(n_) + 1;
    if (hi - lo < 2) return false;
    std::size_t last = n_ - (k_ - j);
    if (!anchor_used) last = std::min(last, anchor_);
    for (std::size_t pos = start; pos <= last; ++pos) {
      const int v = host_[pos];
      if (v <= lo || v >= hi) continue;
      match_[j] = pos;
      if (search(j + 1, pos + 1, anchor_used || pos == anchor_)) return true;
    }
    return false;
  }

  MatchPlan plan_;
  std::span<const int> host_;
  std::size_t k_;
  std::size_t n_;
  std::size_t anchor_;
  std::vector<std::size_t> match_;
};

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_values(values_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::size_t Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " not in permutation");
  }
  return static_cast<std::size_t>(it - values_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[values_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const { return format_permutation(*this); }

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(
      a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::string buffer(text);
    std::istringstream in(buffer);
    std::string token;
    while (in >> token) tokens.push_back(token);
  }
  if (tokens.empty()) throw ParseError("empty permutation");

  std::vector<int> values;
  std::vector<std::string> labels;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    const std::string& digits = tokens[0];
    if (digits.size() > 9) {
      throw ParseError("compact form '" + digits +
                       "' is only allowed for length <= 9; separate values "
                       "with whitespace");
    }
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("invalid token '" + std::string(1, ch) + "' in '" +
                         digits + "'");
      }
      values.push_back(ch - '0');
      labels.emplace_back(1, ch);
    }
  } else {
    for (const std::string& token : tokens) {
      if (token.size() > 5 ||
          !std::all_of(token.begin(), token.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch)) != 0;
          })) {
        throw ParseError("invalid token '" + token + "'");
      }
      values.push_back(std::stoi(token));
      labels.push_back(token);
    }
  }

  const std::size_t n = values.size();
  if (n > kMaxLength) {
    throw ParseError("permutation length " + std::to_string(n) +
                     " exceeds maximum " + std::to_string(kMaxLength));
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = values[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw ParseError("value '" + labels[i] + "' out of range 1.." +
                       std::to_string(n));
    }
    if (seen[v]) throw ParseError("repeated value '" + labels[i] + "'");
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

std::optional<Occurrence> contains(const Permutation& pattern,
                                   const Permutation& host) {
  Matcher matcher(pattern, host, kNoAnchor);
  if (!matcher.run()) return std::nullopt;
  return matcher.occurrence();
}

bool is_contained(const Permutation& pattern, const Permutation& host) {
  return Matcher(pattern, host, kNoAnchor).run();
}

bool is_contained_through(const Permutation& pattern, const Permutation& host,
                          std::size_t anchor_pos) {
  if (anchor_pos < 1 || anchor_pos > host.size()) {
    throw std::out_of_range("anchor position out of range");
  }
  return Matcher(pattern, host, anchor_pos - 1).run();
}

Permutation insert(const Permutation& p, Slot slot) {
  const std::size_t n = p.size();
  if (slot.pos_slot < 1 || slot.pos_slot > n + 1 || slot.val_slot < 1 ||
      static_cast<std::size_t>(slot.val_slot) > n + 1) {
    throw std::out_of_range("slot (" + std::to_string(slot.pos_slot) + ", " +
                            std::to_string(slot.val_slot) +
                            ") outside 1.." + std::to_string(n + 1));
  }
  std::vector<int> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == slot.pos_slot) out.push_back(slot.val_slot);
    const int v = p[i];
    out.push_back(v >= slot.val_slot ? v + 1 : v);
  }
  if (slot.pos_slot == n + 1) out.push_back(slot.val_slot);
  return Permutation(std::move(out));
}

Permutation remove_entry(const Permutation& p, std::size_t pos) {
  if (p.size() < 2) throw std::invalid_argument("cannot delete from length 1");
  if (pos < 1 || pos > p.size()) {
    throw std::out_of_range("position out of range");
  }
  const int removed = p.value_at(pos);
  std::vector<int> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 == pos) continue;
    out.push_back(p[i] > removed ? p[i] - 1 : p[i]);
  }
  return Permutation(std::move(out));
}

std::vector<Bond> bonds(const Permutation& p) {
  std::vector<Bond> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const int a = p[i];
    const int b = p[i + 1];
    if (b == a + 1) {
      out.push_back({i + 1, BondKind::increasing, a});
    } else if (a == b + 1) {
      out.push_back({i + 1, BondKind::decreasing, b});
    }
  }
  return out;
}

Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> parts) {
  const std::size_t k = skeleton.size();
  if (parts.size() != k) {
    throw std::invalid_argument("inflation arity mismatch: skeleton length " +
                                std::to_string(k) + ", " +
                                std::to_string(parts.size()) + " parts");
  }
  // offset[v] = total size of the parts sitting below skeleton value v.
  std::vector<int> size_by_value(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    size_by_value[skeleton[i]] = static_cast<int>(parts[i].size());
  }
  std::vector<int> offset(k + 2, 0);
  for (std::size_t v = 1; v <= k; ++v) {
    offset[v + 1] = offset[v] + size_by_value[v];
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(offset[k + 1]));
  for (std::size_t i = 0; i < k; ++i) {
    const int base = offset[skeleton[i]];
    for (int v : parts[i].values()) out.push_back(base + v);
  }
  return Permutation(std::move(out));
}

Permutation sum(const Permutation& a, const Permutation& b, SumKind kind) {
  const std::array<Permutation, 2> parts{a, b};
  return inflate(kind == SumKind::direct ? Permutation{1, 2}
                                         : Permutation{2, 1},
                 parts);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  return sum(a, b, SumKind::direct);
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  return sum(a, b, SumKind::skew);
}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.values()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permdeflate
