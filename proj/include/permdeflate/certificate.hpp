#pragma once

#include <optional>
#include <set>

#include "permdeflate/perm_class.hpp"
#include "permdeflate/permutation.hpp"

namespace permdeflate {

/// Evidence that a member extends to no simple permutation of its class:
/// every slot on the two strips through a bond is blocked, apart from the
/// crossing cell and the four cells adjacent to the bond.
struct BondCertificate {
  Bond bond;
  std::set<Slot> checked_slots;
  ShadingGrid grid;
};

/// The slots that must be blocked for `bond` of a length-n permutation:
/// the column strip at pos_slot = i+1 without val_slots {w, w+1, w+2}, and
/// the row strip at val_slot = w+1 without pos_slots {i, i+1, i+2}, for a
/// bond at positions i, i+1 with values {w, w+1}. Always 2n - 4 slots.
std::set<Slot> strip_slots(std::size_t n, const Bond& bond);

/// First bond (left to right) whose strips are fully blocked. Throws
/// std::invalid_argument when `p` is not a member of `c`.
std::optional<BondCertificate> bond_certificate(const Permutation& p,
                                                const PermClass& c);

/// Re-checks a certificate against the class from scratch.
bool certificate_valid(const Permutation& p, const BondCertificate& cert,
                       const PermClass& c);

}  // namespace permdeflate
