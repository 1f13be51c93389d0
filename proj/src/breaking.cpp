#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "permdeflate/analysis.hpp"
#include "permdeflate/parallel.hpp"

namespace permdeflate {

namespace {

struct LevelResult {
  std::vector<Permutation> members;
  std::optional<Permutation> best_simple;
};

void offer_simple(std::optional<Permutation>& best, const Permutation& p) {
  if (!best || p < *best) best = p;
}

// Expands one BFS level. When `keep` is false, children are only inspected
// for simplicity and not collected.
LevelResult expand_level(const std::vector<Permutation>& level,
                         const PermClass& c, bool keep) {
  std::vector<LevelResult> partial(level.size());
  parallel_for(level.size(), [&](std::size_t i) {
    const Permutation& parent = level[i];
    const std::size_t side = parent.size() + 1;
    LevelResult& out = partial[i];
    for (std::size_t pos = 1; pos <= side; ++pos) {
      for (int val = 1; val <= static_cast<int>(side); ++val) {
        Permutation child = insert(parent, Slot{pos, val});
        const bool simple = is_simple(child);
        if (!keep && !simple) continue;
        if (!avoids_extension(child, pos, c)) continue;
        if (simple) offer_simple(out.best_simple, child);
        if (keep) out.members.push_back(std::move(child));
      }
    }
  });

  LevelResult merged;
  std::unordered_set<Permutation> seen;
  for (LevelResult& part : partial) {
    if (part.best_simple) offer_simple(merged.best_simple, *part.best_simple);
    for (Permutation& p : part.members) {
      if (seen.insert(p).second) merged.members.push_back(std::move(p));
    }
  }
  return merged;
}

}  // namespace

std::string_view to_string(ExtensionRoute r) {
  switch (r) {
    case ExtensionRoute::already_simple: return "already_simple";
    case ExtensionRoute::interval_splitting: return "interval_splitting";
    case ExtensionRoute::exhaustive: return "exhaustive";
  }
  return "already_simple";
}

bool splits_interval(const Permutation& w, const IntervalSpan& alpha,
                     Slot slot) {
  const std::size_t side = w.size() + 1;
  if (slot.pos_slot < 1 || slot.pos_slot > side || slot.val_slot < 1 ||
      slot.val_slot > static_cast<int>(side)) {
    throw std::out_of_range("slot outside the insertion grid");
  }
  const bool cuts_by_position =
      alpha.pos_lo < slot.pos_slot && slot.pos_slot <= alpha.pos_hi;
  const bool cuts_by_value =
      alpha.val_lo < slot.val_slot && slot.val_slot <= alpha.val_hi;
  if (!cuts_by_position && !cuts_by_value) return false;

  // Bounding box of alpha plus the new entry, in extension coordinates.
  const auto shift_pos = [&](std::size_t pos) {
    return pos >= slot.pos_slot ? pos + 1 : pos;
  };
  const auto shift_val = [&](int v) { return v >= slot.val_slot ? v + 1 : v; };
  const std::size_t pos_lo = std::min(shift_pos(alpha.pos_lo), slot.pos_slot);
  const std::size_t pos_hi = std::max(shift_pos(alpha.pos_hi), slot.pos_slot);
  const int val_lo = std::min(shift_val(alpha.val_lo), slot.val_slot);
  const int val_hi = std::max(shift_val(alpha.val_hi), slot.val_slot);
  const std::size_t members = alpha.size() + 1;
  const bool absorbed = pos_hi - pos_lo + 1 == members &&
                        static_cast<std::size_t>(val_hi - val_lo) + 1 == members;
  return !absorbed;
}

std::vector<BreakReport> breaking_extensions(const Permutation& w,
                                             const PermClass& c) {
  if (!avoids(w, c)) {
    throw std::invalid_argument(format_permutation(w) + " is not a member of " +
                                c.to_string());
  }
  if (!is_indecomposable(w)) {
    throw std::invalid_argument(format_permutation(w) + " is decomposable");
  }
  if (is_simple(w)) {
    throw std::invalid_argument(format_permutation(w) +
                                " is simple; nothing to break");
  }
  const IntervalSpan alpha = longest_maximal_interval(w);
  const std::size_t sd_before = sd_measure(w);
  const std::size_t side = w.size() + 1;

  std::vector<BreakReport> out;
  for (std::size_t pos = 1; pos <= side; ++pos) {
    for (int val = 1; val <= static_cast<int>(side); ++val) {
      const Slot slot{pos, val};
      if (!splits_interval(w, alpha, slot)) continue;
      Permutation ext = insert(w, slot);
      if (!avoids_extension(ext, pos, c)) continue;
      if (!is_indecomposable(ext) || sd_measure(ext) >= sd_before) {
        throw std::logic_error("splitting extension " + format_permutation(ext) +
                               " of " + format_permutation(w) +
                               " failed to reduce the SD measure");
      }
      out.push_back({alpha, slot, std::move(ext)});
    }
  }
  return out;
}

std::optional<Permutation> exhaustive_simple_extension(const Permutation& w,
                                                       const PermClass& c,
                                                       std::size_t max_len) {
  if (!avoids(w, c)) {
    throw std::invalid_argument(format_permutation(w) + " is not a member of " +
                                c.to_string());
  }
  if (is_simple(w)) return w;
  std::vector<Permutation> level{w};
  for (std::size_t len = w.size() + 1; len <= max_len && !level.empty();
       ++len) {
    LevelResult next = expand_level(level, c, len < max_len);
    if (next.best_simple) return next.best_simple;
    level = std::move(next.members);
  }
  return std::nullopt;
}

std::optional<SimpleExtension> extend_to_simple(const Permutation& w,
                                                const PermClass& c,
                                                std::size_t max_len) {
  if (!avoids(w, c)) {
    throw std::invalid_argument(format_permutation(w) + " is not a member of " +
                                c.to_string());
  }
  if (is_simple(w)) {
    if (w.size() > max_len) return std::nullopt;
    return SimpleExtension{w, ExtensionRoute::already_simple, std::nullopt, {}};
  }
  if (w.size() > max_len) return std::nullopt;

  // Interval splitting: each step strictly lowers the SD measure.
  std::optional<EmbeddingTrace> embedding;
  std::optional<Permutation> current;
  if (is_indecomposable(w)) {
    current = w;
  } else if (c.is_principal() && !embedding_excluded(c.basis().front())) {
    embedding = embed_indecomposable(w, c.basis().front());
    current = embedding->result();
  }
  std::vector<BreakReport> chain;
  while (current && current->size() <= max_len && !is_simple(*current)) {
    if (current->size() == max_len) {
      current.reset();
      break;
    }
    std::vector<BreakReport> reports = breaking_extensions(*current, c);
    if (reports.empty()) {
      current.reset();
      break;
    }
    chain.push_back(std::move(reports.front()));
    current = chain.back().extension;
  }
  if (current && current->size() <= max_len && is_simple(*current)) {
    if (!avoids(*current, c) || !is_contained(w, *current)) {
      throw std::logic_error("interval splitting left the class");
    }
    return SimpleExtension{*current, ExtensionRoute::interval_splitting,
                           std::move(embedding), std::move(chain)};
  }

  if (auto simple = exhaustive_simple_extension(w, c, max_len)) {
    return SimpleExtension{*simple, ExtensionRoute::exhaustive, std::nullopt,
                           {}};
  }
  return std::nullopt;
}

}  // namespace permdeflate
