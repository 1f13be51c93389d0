#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "permdeflate/certificate.hpp"
#include "permdeflate/decomposition.hpp"
#include "permdeflate/perm_class.hpp"
#include "permdeflate/permutation.hpp"
#include "permdeflate/symmetry.hpp"

namespace permdeflate {

// ---------------------------------------------------------------------------
// Embedding members of Av(pi) into indecomposable members.

enum class EmbeddingCase {
  none,         // input already indecomposable
  corner_point, // pi = 1 (+) tau up to symmetry: skew-sum, double, link
  outer_2413,   // pi has no corner point: frame the input with four points
};

std::string_view to_string(EmbeddingCase c);

struct EmbeddingTrace {
  /// corner_point: w, w (-) 1, doubled skew components, linked result.
  /// outer_2413: w, framed result. none: just w.
  std::vector<Permutation> stages;
  EmbeddingCase case_used = EmbeddingCase::none;

  const Permutation& result() const { return stages.back(); }
};

/// 1, 12, 21, 132, 213, 231, 312: patterns whose avoiders need not embed.
bool embedding_excluded(const Permutation& pi);

/// Throws std::invalid_argument for an excluded pi or when w contains pi.
EmbeddingTrace embed_indecomposable(const Permutation& w,
                                    const Permutation& pi);

// ---------------------------------------------------------------------------
// Breaking a longest maximal interval with one new entry.

/// A one-point extension that cuts `interval` without being absorbed by it.
struct BreakReport {
  IntervalSpan interval;
  Slot slot;
  Permutation extension;
};

/// True when the entry added at `slot` cuts alpha (by position or value)
/// and alpha plus that entry is not an interval of the extension.
bool splits_interval(const Permutation& w, const IntervalSpan& alpha,
                     Slot slot);

/// Every splitting extension of the longest (leftmost on ties) maximal
/// interval that stays in `c`, in slot order. Each report is checked to be
/// indecomposable with strictly smaller SD measure; a violation throws
/// std::logic_error. Throws std::invalid_argument unless w is a member that
/// is indecomposable and not simple.
std::vector<BreakReport> breaking_extensions(const Permutation& w,
                                             const PermClass& c);

enum class ExtensionRoute { already_simple, interval_splitting, exhaustive };

std::string_view to_string(ExtensionRoute r);

struct SimpleExtension {
  Permutation simple;
  ExtensionRoute route = ExtensionRoute::already_simple;
  /// Set when the interval-splitting route started from a decomposable w.
  std::optional<EmbeddingTrace> embedding;
  /// Interval-splitting steps; empty for the other routes.
  std::vector<BreakReport> chain;
};

/// Searches for a simple member of `c` of length <= max_len containing w.
/// Tries repeated interval splitting first, then falls back to
/// `exhaustive_simple_extension`, so an empty result means no such simple
/// exists within the bound.
std::optional<SimpleExtension> extend_to_simple(const Permutation& w,
                                                const PermClass& c,
                                                std::size_t max_len);

/// Level-by-level search over all one-point extensions inside `c`. Returns
/// the lexicographically least simple of the shortest length found.
std::optional<Permutation> exhaustive_simple_extension(const Permutation& w,
                                                       const PermClass& c,
                                                       std::size_t max_len);

// ---------------------------------------------------------------------------
// Principal class classifier.

/// For pi = 1 (+) rho with rho sum-indecomposable and |pi| >= 4: some entry
/// to the right of the entry 2 is smaller than the first entry of rho.
/// Throws std::invalid_argument for other shapes.
bool condition_ddagger(const Permutation& pi);

enum class DeflationStatus { non_deflatable, deflatable, unknown };

enum class DeflationRule {
  base_empty,         // Av(1)
  base_monotone,      // Av(12), Av(21)
  base_231,           // Av(132), Av(213), Av(231), Av(312)
  three_sum,          // three or more sum components
  two_sum,            // lambda (+) rho, both of length >= 2
  ascent_missing_bond,
  dagger_descent_no_increasing_bond,
  peak_no_increasing_bond,  // 1n...2, rho without increasing bond
  dagger_descent_no_decreasing_bond,
  peak_no_decreasing_bond,  // 1n...2 without decreasing bond
  one_z_two,                // 1z...2, z != 3, z != n
  avoid_2413,
  witness_table,
  unknown,
};

std::string_view to_string(DeflationStatus s);
/// Stable rule identifiers used in reports, e.g. "T3.1 three-sum".
std::string_view rule_label(DeflationRule r);

struct TheoremVerdict {
  DeflationStatus status = DeflationStatus::unknown;
  DeflationRule rule = DeflationRule::unknown;
  /// The symmetry f such that the rule's hypotheses hold for f(pi).
  Symmetry symmetry_used;
};

/// Checks each rule, in priority order, against all eight symmetric images
/// of pi; the first hit decides. Unmatched patterns are deflatable when a
/// known witness covers them, otherwise unknown.
TheoremVerdict classify_principal(const Permutation& pi);

/// Whether the hypotheses of `rule` hold literally for pi (no symmetry).
bool rule_applies(DeflationRule rule, const Permutation& pi);

// ---------------------------------------------------------------------------
// Bounded empirical check.

struct DeflatabilityReport {
  std::size_t cover_len = 0;
  std::size_t search_len = 0;
  std::size_t members_checked = 0;
  /// Members with no simple extension within search_len.
  std::vector<Permutation> unextendable;
  /// Bond certificates for the unextendable members, index-aligned.
  std::vector<std::optional<BondCertificate>> certificates;

  bool covered() const { return unextendable.empty(); }
};

/// Tries to extend every member of length <= cover_len to a simple member of
/// length <= search_len. Throws std::invalid_argument if cover_len exceeds
/// search_len.
DeflatabilityReport empirical_deflatability(const PermClass& c,
                                            std::size_t cover_len,
                                            std::size_t search_len);

}  // namespace permdeflate
