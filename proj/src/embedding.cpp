#include <algorithm>
#include <stdexcept>
#include <utility>

#include "permdeflate/analysis.hpp"

namespace permdeflate {

namespace {

// Builds a permutation from points given in doubled coordinates, so that
// new entries can sit "just before" or "just below" existing ones at odd
// coordinates.
Permutation from_points(std::vector<std::pair<int, int>> points) {
  std::sort(points.begin(), points.end());
  std::vector<int> heights;
  heights.reserve(points.size());
  for (const auto& [x, y] : points) heights.push_back(y);
  return Permutation::standardize<int>(heights);
}

// w (-) 1, then singleton skew components doubled to 12, then consecutive
// components linked by an entry just before the last point of the upper-left
// component and just below the top point of the next one.
std::vector<Permutation> corner_point_stages(const Permutation& w) {
  const Permutation hat = skew_sum(w, Permutation{1});
  std::vector<Permutation> comps = sum_components(hat, SumKind::skew);
  for (Permutation& comp : comps) {
    if (comp.size() == 1) comp = Permutation{1, 2};
  }
  Permutation bar = comps.front();
  for (std::size_t i = 1; i < comps.size(); ++i) bar = skew_sum(bar, comps[i]);

  std::vector<std::pair<int, int>> points;
  for (std::size_t pos = 1; pos <= bar.size(); ++pos) {
    points.emplace_back(2 * static_cast<int>(pos), 2 * bar.value_at(pos));
  }
  // Component i occupies positions [start_i, start_i + |comp_i|) of bar and
  // the values just below those of component i-1.
  std::vector<int> last_pos;
  std::vector<int> top_value;
  int start = 1;
  int top = static_cast<int>(bar.size());
  for (const Permutation& comp : comps) {
    const int len = static_cast<int>(comp.size());
    last_pos.push_back(start + len - 1);
    top_value.push_back(top);
    start += len;
    top -= len;
  }
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    points.emplace_back(2 * last_pos[i] - 1, 2 * top_value[i + 1] - 1);
  }
  return {w, hat, bar, from_points(std::move(points))};
}

// Pattern formed by the leftmost, topmost, bottommost and rightmost entries.
Permutation outer_pattern(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<std::size_t> positions = {1, pi.position_of(static_cast<int>(n)),
                                        pi.position_of(1), n};
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  std::vector<int> keys;
  for (std::size_t pos : positions) keys.push_back(pi.value_at(pos));
  return Permutation::standardize<int>(keys);
}

bool has_corner_point(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  return pi[0] == 1 || pi[0] == n || pi[pi.size() - 1] == 1 ||
         pi[pi.size() - 1] == n;
}

}  // namespace

std::string_view to_string(EmbeddingCase c) {
  switch (c) {
    case EmbeddingCase::none: return "none";
    case EmbeddingCase::corner_point: return "corner_point";
    case EmbeddingCase::outer_2413: return "outer_2413";
  }
  return "none";
}

bool embedding_excluded(const Permutation& pi) {
  static const std::vector<Permutation> kExcluded = {
      {1}, {1, 2}, {2, 1}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};
  return std::find(kExcluded.begin(), kExcluded.end(), pi) != kExcluded.end();
}

EmbeddingTrace embed_indecomposable(const Permutation& w,
                                    const Permutation& pi) {
  if (embedding_excluded(pi)) {
    throw std::invalid_argument("no indecomposable embedding guaranteed for Av(" +
                                format_permutation(pi) + ")");
  }
  if (is_contained(pi, w)) {
    throw std::invalid_argument(format_permutation(w) + " contains " +
                                format_permutation(pi));
  }
  if (is_indecomposable(w)) return {{w}, EmbeddingCase::none};

  if (has_corner_point(pi)) {
    // Each of these symmetries is an involution taking the corner to the
    // bottom-left, i.e. making pi start with 1.
    using N = Symmetry::Name;
    for (N name : {N::identity, N::complement, N::reverse, N::r2}) {
      const Symmetry s(name);
      if (s.apply(pi)[0] != 1) continue;
      std::vector<Permutation> stages = corner_point_stages(s.apply(w));
      for (Permutation& stage : stages) stage = s.apply(stage);
      return {std::move(stages), EmbeddingCase::corner_point};
    }
  }

  // Frame w with four outer points forming 2413, or 3142 when pi's own outer
  // points already form 2413.
  const int m = static_cast<int>(w.size());
  const bool use_3142 = outer_pattern(pi) == Permutation{2, 4, 1, 3};
  std::vector<int> framed;
  framed.reserve(w.size() + 4);
  framed.push_back(use_3142 ? m + 3 : 2);
  framed.push_back(use_3142 ? 1 : m + 4);
  for (int v : w.values()) framed.push_back(v + 2);
  framed.push_back(use_3142 ? m + 4 : 1);
  framed.push_back(use_3142 ? 2 : m + 3);
  return {{w, Permutation(std::move(framed))}, EmbeddingCase::outer_2413};
}

}  // namespace permdeflate
