#include "permdeflate/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permdeflate {

namespace {

void require_indecomposable(const Permutation& p) {
  if (!is_indecomposable(p)) {
    throw std::invalid_argument("maximal intervals not well-defined for "
                                "decomposable permutation " +
                                format_permutation(p));
  }
}

Permutation pattern_of(const Permutation& p, std::size_t pos_lo,
                       std::size_t pos_hi) {
  std::vector<int> keys(p.values().begin() + (pos_lo - 1),
                        p.values().begin() + pos_hi);
  return Permutation::standardize<int>(keys);
}

}  // namespace

bool is_interval(const Permutation& p, std::size_t pos_lo,
                 std::size_t pos_hi) {
  if (pos_lo < 1 || pos_hi < pos_lo || pos_hi > p.size()) return false;
  if (pos_lo == 1 && pos_hi == p.size()) return false;
  int lo = p.value_at(pos_lo);
  int hi = lo;
  for (std::size_t i = pos_lo; i < pos_hi; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
  }
  return static_cast<std::size_t>(hi - lo) == pos_hi - pos_lo;
}

IntervalSpan span_of(const Permutation& p, std::size_t pos_lo,
                     std::size_t pos_hi) {
  int lo = p.value_at(pos_lo);
  int hi = lo;
  for (std::size_t i = pos_lo; i < pos_hi; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
  }
  return IntervalSpan{pos_lo, pos_hi, lo, hi};
}

std::vector<IntervalSpan> proper_intervals(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<IntervalSpan> out;
  for (std::size_t lo = 0; lo < n; ++lo) {
    int vmin = p[lo];
    int vmax = p[lo];
    for (std::size_t hi = lo + 1; hi < n; ++hi) {
      vmin = std::min(vmin, p[hi]);
      vmax = std::max(vmax, p[hi]);
      const std::size_t width = hi - lo + 1;
      if (width == n) break;
      if (static_cast<std::size_t>(vmax - vmin) + 1 == width) {
        out.push_back({lo + 1, hi + 1, vmin, vmax});
      }
    }
  }
  return out;
}

bool is_simple(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t lo = 0; lo + 1 < n; ++lo) {
    int vmin = p[lo];
    int vmax = p[lo];
    for (std::size_t hi = lo + 1; hi < n; ++hi) {
      vmin = std::min(vmin, p[hi]);
      vmax = std::max(vmax, p[hi]);
      const std::size_t width = hi - lo + 1;
      if (width == n) break;
      if (static_cast<std::size_t>(vmax - vmin) + 1 == width) return false;
    }
  }
  return true;
}

bool is_sum_decomposable(const Permutation& p) {
  int running_max = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    running_max = std::max(running_max, p[i]);
    if (static_cast<std::size_t>(running_max) == i + 1) return true;
  }
  return false;
}

bool is_skew_decomposable(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  int running_min = n + 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    running_min = std::min(running_min, p[i]);
    if (running_min == n - static_cast<int>(i)) return true;
  }
  return false;
}

bool is_indecomposable(const Permutation& p) {
  return !is_sum_decomposable(p) && !is_skew_decomposable(p);
}

std::vector<Permutation> sum_components(const Permutation& p, SumKind kind) {
  const std::size_t n = p.size();
  std::vector<Permutation> out;
  std::size_t start = 0;
  int running_max = 0;
  int running_min = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    running_max = std::max(running_max, p[i]);
    running_min = std::min(running_min, p[i]);
    const bool cut =
        kind == SumKind::direct
            ? static_cast<std::size_t>(running_max) == i + 1
            : running_min == static_cast<int>(n) - static_cast<int>(i);
    if (cut) {
      out.push_back(pattern_of(p, start + 1, i + 1));
      start = i + 1;
    }
  }
  return out;
}

Permutation DecompositionTree::flatten() const {
  if (children.empty()) return skeleton;
  std::vector<Permutation> parts;
  parts.reserve(children.size());
  for (const DecompositionTree& child : children) {
    parts.push_back(child.flatten());
  }
  return inflate(skeleton, parts);
}

DecompositionTree substitution_decompose(const Permutation& p) {
  DecompositionTree tree;
  if (p.size() == 1) return tree;

  for (SumKind kind : {SumKind::direct, SumKind::skew}) {
    std::vector<Permutation> comps = sum_components(p, kind);
    if (comps.size() < 2) continue;
    Permutation rest = comps[1];
    for (std::size_t i = 2; i < comps.size(); ++i) {
      rest = sum(rest, comps[i], kind);
    }
    tree.skeleton = kind == SumKind::direct ? Permutation{1, 2}
                                            : Permutation{2, 1};
    tree.children.push_back(substitution_decompose(comps[0]));
    tree.children.push_back(substitution_decompose(rest));
    return tree;
  }

  const std::vector<IntervalSpan> blocks = maximal_intervals(p);
  std::vector<int> keys;
  keys.reserve(blocks.size());
  for (const IntervalSpan& block : blocks) keys.push_back(block.val_lo);
  tree.skeleton = Permutation::standardize<int>(keys);
  for (const IntervalSpan& block : blocks) {
    tree.children.push_back(
        substitution_decompose(pattern_of(p, block.pos_lo, block.pos_hi)));
  }
  return tree;
}

std::vector<IntervalSpan> maximal_intervals(const Permutation& p) {
  require_indecomposable(p);
  const std::size_t n = p.size();
  std::vector<IntervalSpan> out;
  std::size_t lo = 0;
  while (lo < n) {
    // Largest proper interval starting at lo; for indecomposable p it is the
    // maximal interval containing lo.
    std::size_t best = lo;
    int vmin = p[lo];
    int vmax = p[lo];
    int best_min = vmin;
    int best_max = vmax;
    for (std::size_t hi = lo + 1; hi < n; ++hi) {
      vmin = std::min(vmin, p[hi]);
      vmax = std::max(vmax, p[hi]);
      const std::size_t width = hi - lo + 1;
      if (width == n) break;
      if (static_cast<std::size_t>(vmax - vmin) + 1 == width) {
        best = hi;
        best_min = vmin;
        best_max = vmax;
      }
    }
    out.push_back({lo + 1, best + 1, best_min, best_max});
    lo = best + 1;
  }
  return out;
}

std::size_t sd_measure(const Permutation& p) {
  std::size_t total = 0;
  for (const IntervalSpan& gamma : maximal_intervals(p)) {
    total += gamma.size() - 1;
  }
  return total;
}

IntervalSpan longest_maximal_interval(const Permutation& p) {
  const std::vector<IntervalSpan> blocks = maximal_intervals(p);
  const IntervalSpan* best = &blocks.front();
  for (const IntervalSpan& block : blocks) {
    if (block.size() > best->size()) best = &block;
  }
  return *best;
}

QuadrantView quadrants(const Permutation& p, const IntervalSpan& alpha) {
  const bool singleton = alpha.pos_lo == alpha.pos_hi && alpha.pos_lo >= 1 &&
                         alpha.pos_lo <= p.size();
  if (!(singleton || is_interval(p, alpha.pos_lo, alpha.pos_hi)) ||
      span_of(p, alpha.pos_lo, alpha.pos_hi) != alpha) {
    throw std::invalid_argument("not an interval of " + format_permutation(p));
  }
  QuadrantView view;
  view.alpha = alpha;
  for (std::size_t pos = 1; pos <= p.size(); ++pos) {
    if (pos >= alpha.pos_lo && pos <= alpha.pos_hi) continue;
    const int v = p.value_at(pos);
    const bool left = pos < alpha.pos_lo;
    const bool below = v < alpha.val_lo;
    const Entry e{pos, v};
    if (left) {
      (below ? view.beta : view.gamma).push_back(e);
    } else {
      (below ? view.epsilon : view.delta).push_back(e);
    }
  }
  return view;
}

}  // namespace permdeflate
