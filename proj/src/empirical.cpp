#include <stdexcept>
#include <unordered_set>

#include "permdeflate/analysis.hpp"

namespace permdeflate {

namespace {

// Adds every pattern of `simple` with length <= max_len to `covered`.
void cover_patterns(const Permutation& simple, std::size_t max_len,
                    std::unordered_set<Permutation>& covered) {
  std::vector<Permutation> frontier{simple};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      if (p.size() <= max_len && !covered.insert(p).second) continue;
      if (p.size() == 1) continue;
      for (std::size_t pos = 1; pos <= p.size(); ++pos) {
        next.push_back(remove_entry(p, pos));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

DeflatabilityReport empirical_deflatability(const PermClass& c,
                                            std::size_t cover_len,
                                            std::size_t search_len) {
  if (cover_len > search_len) {
    throw std::invalid_argument("cover_len must not exceed search_len");
  }
  DeflatabilityReport report;
  report.cover_len = cover_len;
  report.search_len = search_len;
  std::vector<std::vector<Permutation>> levels;
  for_each_level(c, cover_len,
                 [&](std::size_t, const std::vector<Permutation>& level) {
                   levels.push_back(level);
                 });

  // Longest first: a simple found for a long member usually covers most of
  // the shorter ones.
  std::unordered_set<Permutation> covered;
  std::vector<Permutation> unextendable;
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    for (const Permutation& w : *level) {
      ++report.members_checked;
      if (covered.count(w) != 0) continue;
      if (auto ext = extend_to_simple(w, c, search_len)) {
        cover_patterns(ext->simple, cover_len, covered);
      } else {
        unextendable.push_back(w);
      }
    }
  }
  std::sort(unextendable.begin(), unextendable.end());
  for (const Permutation& w : unextendable) {
    report.certificates.push_back(bond_certificate(w, c));
  }
  report.unextendable = std::move(unextendable);
  return report;
}

}  // namespace permdeflate
