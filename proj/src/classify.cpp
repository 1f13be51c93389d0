#include <algorithm>
#include <stdexcept>

#include "permdeflate/analysis.hpp"
#include "permdeflate/witness.hpp"

namespace permdeflate {

namespace {

bool has_bond(const Permutation& p, BondKind kind) {
  const std::vector<Bond> all = bonds(p);
  return std::any_of(all.begin(), all.end(),
                     [kind](const Bond& b) { return b.kind == kind; });
}

// rho when p = 1 (+) rho with rho sum-indecomposable of length >= 2.
std::optional<Permutation> one_plus_rho(const Permutation& p) {
  if (p.size() < 3 || p[0] != 1) return std::nullopt;
  std::vector<Permutation> comps = sum_components(p, SumKind::direct);
  if (comps.size() != 2) return std::nullopt;
  return comps[1];
}

bool starts_with_ascent(const Permutation& p) { return p[0] < p[1]; }

// 1 n ... 2
bool peak_form(const Permutation& p) {
  const std::size_t n = p.size();
  return n >= 3 && p[0] == 1 && p[1] == static_cast<int>(n) && p[n - 1] == 2;
}

bool is_one_of(const Permutation& p, std::initializer_list<Permutation> list) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

bool in_witness_table(const Permutation& pi) {
  for (const WitnessRow& row : published_witnesses()) {
    if (row.basis.is_principal() && row.basis.basis().front() == pi) return true;
  }
  return false;
}

}  // namespace

bool condition_ddagger(const Permutation& pi) {
  const std::optional<Permutation> rho = one_plus_rho(pi);
  if (!rho || pi.size() < 4) {
    throw std::invalid_argument(format_permutation(pi) +
                                " is not of the form 1 (+) rho with rho "
                                "sum-indecomposable and length >= 4");
  }
  const int first_of_rho = pi[1];
  for (std::size_t pos = pi.position_of(2) + 1; pos <= pi.size(); ++pos) {
    if (pi.value_at(pos) < first_of_rho) return true;
  }
  return false;
}

std::string_view to_string(DeflationStatus s) {
  switch (s) {
    case DeflationStatus::non_deflatable: return "non_deflatable";
    case DeflationStatus::deflatable: return "deflatable";
    case DeflationStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view rule_label(DeflationRule r) {
  switch (r) {
    case DeflationRule::base_empty: return "degenerate";
    case DeflationRule::base_monotone: return "base 12/21";
    case DeflationRule::base_231: return "base 231-type";
    case DeflationRule::three_sum: return "T3.1 three-sum";
    case DeflationRule::two_sum: return "T3.2 two-sum";
    case DeflationRule::ascent_missing_bond: return "T3.3 bond case";
    case DeflationRule::dagger_descent_no_increasing_bond:
      return "T3.4 bond case";
    case DeflationRule::peak_no_increasing_bond: return "T3.5 bond case";
    case DeflationRule::dagger_descent_no_decreasing_bond:
      return "T3.6 bond case";
    case DeflationRule::peak_no_decreasing_bond: return "T3.7 bond case";
    case DeflationRule::one_z_two: return "T3.8 1z...2";
    case DeflationRule::avoid_2413: return "P5.1 2413";
    case DeflationRule::witness_table: return "witness-table";
    case DeflationRule::unknown: return "unknown";
  }
  return "unknown";
}

bool rule_applies(DeflationRule rule, const Permutation& pi) {
  const std::size_t n = pi.size();
  switch (rule) {
    case DeflationRule::base_empty:
      return n == 1;
    case DeflationRule::base_monotone:
      return is_one_of(pi, {{1, 2}, {2, 1}});
    case DeflationRule::base_231:
      return is_one_of(pi, {{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}});
    case DeflationRule::three_sum:
      return sum_components(pi, SumKind::direct).size() >= 3;
    case DeflationRule::two_sum: {
      const auto comps = sum_components(pi, SumKind::direct);
      return comps.size() == 2 && comps[0].size() >= 2 && comps[1].size() >= 2;
    }
    case DeflationRule::avoid_2413:
      return pi == Permutation{2, 4, 1, 3};
    case DeflationRule::witness_table:
      return in_witness_table(pi);
    case DeflationRule::unknown:
      return true;
    default:
      break;
  }

  const std::optional<Permutation> rho = one_plus_rho(pi);
  if (!rho) return false;
  const bool inc = has_bond(*rho, BondKind::increasing);
  const bool dec = has_bond(*rho, BondKind::decreasing);
  switch (rule) {
    case DeflationRule::ascent_missing_bond:
      return starts_with_ascent(*rho) && (!inc || !dec);
    case DeflationRule::dagger_descent_no_increasing_bond:
      return n >= 4 && !starts_with_ascent(*rho) && !inc &&
             condition_ddagger(pi);
    case DeflationRule::peak_no_increasing_bond:
      return peak_form(pi) && !inc;
    case DeflationRule::dagger_descent_no_decreasing_bond:
      return n >= 4 && !starts_with_ascent(*rho) && !dec &&
             condition_ddagger(pi);
    case DeflationRule::peak_no_decreasing_bond:
      return peak_form(pi) && !has_bond(pi, BondKind::decreasing);
    case DeflationRule::one_z_two:
      return pi[n - 1] == 2 && pi[1] != 3 && pi[1] != static_cast<int>(n);
    default:
      return false;
  }
}

TheoremVerdict classify_principal(const Permutation& pi) {
  using R = DeflationRule;
  using S = DeflationStatus;
  static constexpr std::pair<R, S> kOrder[] = {
      {R::base_empty, S::deflatable},
      {R::base_monotone, S::deflatable},
      {R::base_231, S::deflatable},
      {R::three_sum, S::non_deflatable},
      {R::two_sum, S::non_deflatable},
      {R::ascent_missing_bond, S::non_deflatable},
      {R::dagger_descent_no_increasing_bond, S::non_deflatable},
      {R::peak_no_increasing_bond, S::non_deflatable},
      {R::dagger_descent_no_decreasing_bond, S::non_deflatable},
      {R::peak_no_decreasing_bond, S::non_deflatable},
      {R::one_z_two, S::non_deflatable},
      {R::avoid_2413, S::non_deflatable},
      {R::witness_table, S::deflatable},
  };
  const std::array<Symmetry, 8> symmetries = Symmetry::all();
  std::vector<Permutation> images;
  for (Symmetry s : symmetries) images.push_back(s.apply(pi));

  for (const auto& [rule, status] : kOrder) {
    for (std::size_t i = 0; i < 8; ++i) {
      if (rule_applies(rule, images[i])) return {status, rule, symmetries[i]};
    }
  }
  return {S::unknown, R::unknown, Symmetry()};
}

}  // namespace permdeflate
