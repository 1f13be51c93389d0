#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "permdeflate/permutation.hpp"

namespace permdeflate {

/// A block of entries whose positions and values are both contiguous.
/// Ranges are 1-based and inclusive.
struct IntervalSpan {
  std::size_t pos_lo = 1;
  std::size_t pos_hi = 1;
  int val_lo = 1;
  int val_hi = 1;

  std::size_t size() const { return pos_hi - pos_lo + 1; }
  friend auto operator<=>(const IntervalSpan&, const IntervalSpan&) = default;
};

/// Whether the entries at positions [pos_lo, pos_hi] form an interval. The
/// whole permutation never counts; a single entry always does.
bool is_interval(const Permutation& p, std::size_t pos_lo, std::size_t pos_hi);
/// Interval spanned by positions [pos_lo, pos_hi], assuming it is one.
IntervalSpan span_of(const Permutation& p, std::size_t pos_lo,
                     std::size_t pos_hi);

/// All intervals of size 2..n-1, sorted by (pos_lo, pos_hi).
std::vector<IntervalSpan> proper_intervals(const Permutation& p);

/// No intervals besides singletons. 1, 12 and 21 are simple; nothing of
/// length 3 is.
bool is_simple(const Permutation& p);

bool is_sum_decomposable(const Permutation& p);
bool is_skew_decomposable(const Permutation& p);
bool is_indecomposable(const Permutation& p);

/// Finest decomposition p = p_1 (+) ... (+) p_k (or skew), each component
/// indecomposable of that kind.
std::vector<Permutation> sum_components(const Permutation& p, SumKind kind);

/// Substitution decomposition. Simple skeletons of length > 2 have the
/// maximal intervals as children; 12 / 21 skeletons are binary with a
/// sum- (resp. skew-) indecomposable first child. A leaf has skeleton 1 and
/// no children.
struct DecompositionTree {
  Permutation skeleton{1};
  std::vector<DecompositionTree> children;

  bool is_leaf() const { return children.empty(); }
  /// Re-inflates the tree bottom-up.
  Permutation flatten() const;
};

DecompositionTree substitution_decompose(const Permutation& p);

/// Maximal intervals (singletons included) of an indecomposable
/// permutation, in position order. Throws std::invalid_argument for
/// decomposable input, where maximal intervals may overlap.
std::vector<IntervalSpan> maximal_intervals(const Permutation& p);

/// Sum of (|gamma| - 1) over the maximal intervals. Indecomposable input only.
std::size_t sd_measure(const Permutation& p);

/// Leftmost among the longest maximal intervals.
IntervalSpan longest_maximal_interval(const Permutation& p);

struct Entry {
  std::size_t position;
  int value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Entries outside an interval alpha, split into the four corners:
/// beta lower-left, gamma upper-left, delta upper-right, epsilon lower-right.
struct QuadrantView {
  IntervalSpan alpha;
  std::vector<Entry> beta;
  std::vector<Entry> gamma;
  std::vector<Entry> delta;
  std::vector<Entry> epsilon;
};

QuadrantView quadrants(const Permutation& p, const IntervalSpan& alpha);

}  // namespace permdeflate
