#include "permdeflate/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace permdeflate {

std::set<Slot> strip_slots(std::size_t n, const Bond& bond) {
  const std::size_t i = bond.left_pos;
  const int w = bond.low_value;
  std::set<Slot> out;
  for (int v = 1; v <= static_cast<int>(n) + 1; ++v) {
    if (v >= w && v <= w + 2) continue;
    out.insert(Slot{i + 1, v});
  }
  for (std::size_t pos = 1; pos <= n + 1; ++pos) {
    if (pos >= i && pos <= i + 2) continue;
    out.insert(Slot{pos, w + 1});
  }
  return out;
}

std::optional<BondCertificate> bond_certificate(const Permutation& p,
                                                const PermClass& c) {
  if (!avoids(p, c)) {
    throw std::invalid_argument(format_permutation(p) + " is not a member of " +
                                c.to_string());
  }
  // Length 2 is already simple and its strips are empty.
  if (p.size() < 3) return std::nullopt;
  for (const Bond& bond : bonds(p)) {
    std::set<Slot> strips = strip_slots(p.size(), bond);
    const bool certified =
        std::all_of(strips.begin(), strips.end(),
                    [&](const Slot& s) { return slot_blocked(p, s, c); });
    if (certified) {
      return BondCertificate{bond, std::move(strips), shading_grid(p, c)};
    }
  }
  return std::nullopt;
}

bool certificate_valid(const Permutation& p, const BondCertificate& cert,
                       const PermClass& c) {
  const std::vector<Bond> all = bonds(p);
  if (std::find(all.begin(), all.end(), cert.bond) == all.end()) return false;
  if (cert.checked_slots != strip_slots(p.size(), cert.bond)) return false;
  if (!(cert.grid.host == p)) return false;
  return std::all_of(cert.checked_slots.begin(), cert.checked_slots.end(),
                     [&](const Slot& s) {
                       return cert.grid.is_blocked(s) && slot_blocked(p, s, c);
                     });
}

}  // namespace permdeflate
