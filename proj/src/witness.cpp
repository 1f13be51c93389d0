#include "permdeflate/witness.hpp"

#include <istream>
#include <stdexcept>

#include "permdeflate/analysis.hpp"
#include "permdeflate/decomposition.hpp"

namespace permdeflate {

std::vector<WitnessReport> find_witnesses(const PermClass& c,
                                          std::size_t max_len,
                                          std::size_t limit) {
  if (max_len < 1 || limit < 1) {
    throw std::invalid_argument("max_len and limit must be positive");
  }
  std::vector<WitnessReport> out;
  ClassEnumerator gen(c, max_len);
  while (out.size() < limit && gen.next()) {
    for (const Permutation& member : gen.level()) {
      if (bonds(member).empty()) continue;
      std::optional<BondCertificate> cert = bond_certificate(member, c);
      if (!cert) continue;
      const std::size_t bound = max_len + 2;
      if (auto simple = exhaustive_simple_extension(member, c, bound)) {
        throw std::logic_error("certified " + format_permutation(member) +
                               " extends to simple " +
                               format_permutation(*simple));
      }
      out.push_back({c, member, std::move(*cert), bound});
      if (out.size() == limit) break;
    }
  }
  return out;
}

Permutation parallel_alternation(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("parallel alternation needs even n >= 4, got " +
                                std::to_string(n));
  }
  std::vector<int> values;
  values.reserve(n);
  for (std::size_t v = 2; v <= n; v += 2) values.push_back(static_cast<int>(v));
  for (std::size_t v = 1; v < n; v += 2) values.push_back(static_cast<int>(v));
  return Permutation(std::move(values));
}

InflationFamily inflation_family(const Permutation& theta) {
  const Permutation one{1};
  const Permutation pi_base{2, 5, 1, 3, 6, 4};
  const Permutation omega_base{2, 5, 1, 7, 3, 4, 8, 6};
  const std::vector<Permutation> pi_parts = {one, theta, one, one, one, one};
  const std::vector<Permutation> omega_parts = {one, theta, one, theta,
                                                one, one,   one, one};
  InflationFamily out{inflate(pi_base, pi_parts),
                      inflate(omega_base, omega_parts)};

  const PermClass c({out.pi_star});
  out.omega_avoids = avoids(out.omega_star, c);

  // The base entries 3 and 4 (positions 5 and 6 of omega) stay singletons,
  // so they remain adjacent in both position and value.
  const std::size_t t = theta.size();
  const std::size_t bond_pos = 2 * t + 3;
  const IntervalSpan bond = span_of(out.omega_star, bond_pos, bond_pos + 1);
  if (bond.val_hi != bond.val_lo + 1) {
    throw std::logic_error("inflated bond lost its shape");
  }

  const std::size_t side = out.omega_star.size() + 1;
  for (std::size_t pos = 1; pos <= side; ++pos) {
    for (int val = 1; val <= static_cast<int>(side); ++val) {
      const Slot slot{pos, val};
      if (!splits_interval(out.omega_star, bond, slot)) continue;
      ++out.splitting_slots;
      if (!is_contained(out.pi_star, insert(out.omega_star, slot))) {
        ++out.escaping_slots;
      }
    }
  }
  out.verified = out.omega_avoids && out.escaping_slots == 0;
  return out;
}

const std::vector<WitnessRow>& published_witnesses() {
  static const std::vector<WitnessRow> kRows = [] {
    const char* const kText[][2] = {
        {"1 3 4 6 5 2", "6 8 9 3 4 1 10 14 7 13 5 12 11 2"},
        {"2 4 6 1 3 5", "4 7 2 9 11 5 6 1 10 3 8"},
        {"2 4 6 5 1 3", "5 9 3 11 8 2 10 6 7 1 4"},
        {"2 5 1 3 6 4", "2 5 1 7 3 4 8 6"},
        {"2 5 1 4 6 3", "2 6 1 8 4 3 7 9 5"},
        {"2 5 4 6 1 3", "5 9 3 11 2 8 10 6 7 1 4"},
        {"2 5 6 4 1 3", "4 7 9 2 10 8 5 6 1 3"},
        {"1 5 2 3 7 6 4",
         "11 18 14 16 8 19 6 7 22 13 1 10 5 24 2 3 9 17 23 4 21 20 15 12"},
        {"2 6 1 3 4 7 5", "2 6 1 3 9 4 5 7 10 8"},
        {"2 6 3 1 5 7 4", "2 6 3 1 9 5 4 8 10 7"},
        {"2 4 6 8 1 3 5 7", "5 8 11 2 13 4 14 16 18 9 10 6 1 15 17 3 7 12"},
        {"2 4 6 8 10 1 3 5 7 9",
         "2 7 10 13 4 16 9 18 6 20 8 22 24 14 15 11 1 19 21 3 23 5 12 17"},
        {"2 4 6 8 10 12 1 3 5 7 9 11",
         "3 8 13 16 5 19 9 12 21 2 7 23 11 25 27 29 17 18 14 1 22 24 4 26 6 "
         "28 10 15 20"},
        {"2 4 6 8 10 12 14 1 3 5 7 9 11 13",
         "3 8 12 16 20 5 23 9 13 18 25 2 7 27 11 29 14 31 33 35 21 22 17 1 26 "
         "28 4 30 6 32 10 15 34 19 24"},
    };
    std::vector<WitnessRow> rows;
    for (const auto& [basis, witness] : kText) {
      rows.push_back({PermClass::parse(basis), parse_permutation(witness)});
    }
    return rows;
  }();
  return kRows;
}

std::vector<WitnessRow> parse_witness_corpus(std::istream& in) {
  std::vector<WitnessRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'basis | witness'");
    }
    try {
      rows.push_back({PermClass::parse(line.substr(0, bar)),
                      parse_permutation(line.substr(bar + 1))});
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::string format_witness_row(const WitnessRow& row) {
  return row.basis.basis_text() + " | " + format_permutation(row.witness);
}

std::vector<TableRowResult> verify_witness_table(
    const std::vector<WitnessRow>& rows, std::size_t cross_check_cap) {
  std::vector<TableRowResult> out;
  out.reserve(rows.size());
  for (const WitnessRow& row : rows) {
    TableRowResult result{row, false, std::nullopt};
    result.member = avoids(row.witness, row.basis);
    if (result.member) {
      result.certificate = bond_certificate(row.witness, row.basis);
      if (row.witness.size() <= cross_check_cap) {
        result.cross_checked = true;
        result.search_len = row.witness.size() + 2;
        result.no_simple_extension =
            !extend_to_simple(row.witness, row.basis, result.search_len);
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace permdeflate
