#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permdeflate/certificate.hpp"
#include "permdeflate/perm_class.hpp"
#include "permdeflate/permutation.hpp"

namespace permdeflate {

/// A member of a class carrying a bond certificate, plus the length up to
/// which an exhaustive search independently found no simple extension.
struct WitnessReport {
  PermClass class_basis;
  Permutation witness;
  BondCertificate certificate;
  std::size_t cross_check_bound = 0;
};

/// Scans members in enumeration order and returns up to `limit` certified
/// ones. Each is cross-checked by exhaustive search to max_len + 2; a
/// simple extension found there throws std::logic_error.
std::vector<WitnessReport> find_witnesses(const PermClass& c,
                                          std::size_t max_len,
                                          std::size_t limit);

/// 2 4 6 ... n 1 3 5 ... n-1 for even n >= 4.
Permutation parallel_alternation(std::size_t n);

struct InflationFamily {
  Permutation pi_star;
  Permutation omega_star;
  bool omega_avoids = false;
  /// Slots that split the {3,4} bond of omega_star without joining it.
  std::size_t splitting_slots = 0;
  /// Of those, how many extensions avoid pi_star (0 when verified).
  std::size_t escaping_slots = 0;
  bool verified = false;
};

/// pi* = 251364[1,theta,1,1,1,1] and omega* = 25173486[1,theta,1,theta,1,1,1,1].
/// Verified when omega* avoids pi* and every one-point extension splitting
/// the {3,4} bond of omega* (without joining it) contains pi*.
InflationFamily inflation_family(const Permutation& theta);

/// One "basis | witness" row of a witness corpus.
struct WitnessRow {
  PermClass basis;
  Permutation witness;
};

/// The fourteen known rows: ten sporadic classes and four parallel
/// alternations of lengths 8 to 14.
const std::vector<WitnessRow>& published_witnesses();

/// Lines of "basis | witness"; blank lines and lines starting with '#' are
/// skipped. Throws ParseError with the line number on malformed input.
std::vector<WitnessRow> parse_witness_corpus(std::istream& in);
std::string format_witness_row(const WitnessRow& row);

struct TableRowResult {
  WitnessRow row;
  bool member = false;
  std::optional<BondCertificate> certificate;
  /// Exhaustive search ran (witness length within the cap).
  bool cross_checked = false;
  /// Search bound used when cross_checked.
  std::size_t search_len = 0;
  /// No simple extension up to search_len (meaningful when cross_checked).
  bool no_simple_extension = false;

  bool pass() const {
    return member && certificate.has_value() &&
           (!cross_checked || no_simple_extension);
  }
};

/// Checks membership, certificate and, for witnesses of length <=
/// cross_check_cap, that extend_to_simple finds nothing up to |witness|+2.
std::vector<TableRowResult> verify_witness_table(
    const std::vector<WitnessRow>& rows, std::size_t cross_check_cap = 14);

}  // namespace permdeflate
