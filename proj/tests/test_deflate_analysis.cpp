#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permdeflate/analysis.hpp"
#include "permdeflate/witness.hpp"

using namespace permdeflate;

namespace {

// Whether the entry added at (x, y) cuts alpha and alpha plus it is not an
// interval of the extension, computed on explicit point sets.
bool oracle_splits(const Permutation& w, const IntervalSpan& alpha,
                   std::size_t x, int y) {
  const bool cuts = (alpha.pos_lo < x && x <= alpha.pos_hi) ||
                    (alpha.val_lo < y && y <= alpha.val_hi);
  if (!cuts) return false;
  const Permutation ext = oracle::insert_point(w, x, y);
  std::vector<std::size_t> positions;
  for (std::size_t p = alpha.pos_lo; p <= alpha.pos_hi; ++p) {
    positions.push_back(p >= x ? p + 1 : p);
  }
  positions.push_back(x);
  std::sort(positions.begin(), positions.end());
  std::vector<int> values;
  for (std::size_t p : positions) values.push_back(ext.value_at(p));
  std::sort(values.begin(), values.end());
  const bool contiguous_pos =
      positions.back() - positions.front() + 1 == positions.size();
  const bool contiguous_val =
      static_cast<std::size_t>(values.back() - values.front()) + 1 ==
      values.size();
  return !(contiguous_pos && contiguous_val);
}

void check_report(const Permutation& w, const PermClass& c,
                  const BreakReport& r) {
  const Permutation& ext = r.extension;
  REQUIRE(ext == insert(w, r.slot));
  REQUIRE(oracle_splits(w, r.interval, r.slot.pos_slot, r.slot.val_slot));
  REQUIRE(oracle::avoids_all(ext, c.basis()));
  REQUIRE(!oracle::sum_decomposable(ext));
  REQUIRE(!oracle::skew_decomposable(ext));
  REQUIRE(sd_measure(ext) < sd_measure(w));
}

}  // namespace

TEST_CASE("embedding reproduces the worked example") {
  const EmbeddingTrace t =
      embed_indecomposable(parse_permutation("564213"), parse_permutation("1324"));
  CHECK(t.case_used == EmbeddingCase::corner_point);
  REQUIRE(t.stages.size() == 4);
  CHECK(t.stages[1] == parse_permutation("6753241"));
  CHECK(t.stages[2] == parse_permutation("896743512"));
  CHECK(t.result() ==
        parse_permutation("11 9 12 8 6 10 5 4 2 7 1 3"));
}

TEST_CASE("embedding trivial and degenerate inputs") {
  const Permutation simple = parse_permutation("2413");
  const EmbeddingTrace same = embed_indecomposable(simple, parse_permutation("321"));
  CHECK(same.stages.size() == 1);
  CHECK(same.case_used == EmbeddingCase::none);

  const EmbeddingTrace one = embed_indecomposable(Permutation{1}, Permutation{3, 2, 1});
  CHECK(one.result().size() >= 1);
  CHECK(is_indecomposable(one.result()));
  CHECK(oracle::avoids_all(one.result(), {Permutation{3, 2, 1}}));

  CHECK_THROWS_AS(embed_indecomposable(Permutation{1, 2}, Permutation{2, 3, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_indecomposable(Permutation{3, 2, 1}, Permutation{3, 2, 1}),
                  std::invalid_argument);
  CHECK(embedding_excluded(Permutation{1}));
  CHECK_FALSE(embedding_excluded(Permutation{3, 2, 1}));
}

TEST_CASE("embedding postconditions for length-4 patterns") {
  for (const Permutation& pi : oracle::all_of_length(4)) {
    const PermClass c({pi});
    for (const Permutation& w : enumerate_class(c, 5)) {
      const EmbeddingTrace t = embed_indecomposable(w, pi);
      REQUIRE(t.stages.front() == w);
      for (std::size_t i = 1; i < t.stages.size(); ++i) {
        REQUIRE(oracle::contains(t.stages[i - 1], t.stages[i]));
        REQUIRE(!oracle::contains(pi, t.stages[i]));
      }
      REQUIRE(!oracle::sum_decomposable(t.result()));
      REQUIRE(!oracle::skew_decomposable(t.result()));
    }
  }
}

TEST_CASE("breaking extensions of 24513 in Av(321)") {
  const Permutation w = parse_permutation("24513");
  const PermClass c = PermClass::parse("321");
  const auto reports = breaking_extensions(w, c);
  REQUIRE_FALSE(reports.empty());
  const IntervalSpan alpha = longest_maximal_interval(w);
  CHECK(alpha.val_lo == 4);
  CHECK(alpha.val_hi == 5);

  std::set<Slot> want;
  for (std::size_t x = 1; x <= 6; ++x) {
    for (int y = 1; y <= 6; ++y) {
      if (oracle_splits(w, alpha, x, y) &&
          oracle::avoids_all(oracle::insert_point(w, x, y), c.basis())) {
        want.insert(Slot{x, y});
      }
    }
  }
  std::set<Slot> got;
  for (const BreakReport& r : reports) {
    check_report(w, c, r);
    got.insert(r.slot);
  }
  CHECK(got == want);
}

TEST_CASE("breaking extension edge cases") {
  CHECK(breaking_extensions(parse_permutation("25173486"),
                            PermClass::parse("251364"))
            .empty());
  CHECK_THROWS_AS(breaking_extensions(Permutation{2, 4, 1, 3}, PermClass::parse("321")),
                  std::invalid_argument);
  CHECK_THROWS_AS(breaking_extensions(Permutation{1, 2, 3}, PermClass::parse("321")),
                  std::invalid_argument);
  CHECK_THROWS_AS(breaking_extensions(Permutation{3, 2, 1}, PermClass::parse("321")),
                  std::invalid_argument);
}

TEST_CASE("splitting slots reduce SD for every indecomposable w up to length 6") {
  for (std::size_t n = 4; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      if (!is_indecomposable(w) || is_simple(w)) return;
      const IntervalSpan alpha = longest_maximal_interval(w);
      const std::size_t sd = sd_measure(w);
      for (std::size_t x = 1; x <= n + 1; ++x) {
        for (int y = 1; y <= static_cast<int>(n) + 1; ++y) {
          const bool split = splits_interval(w, alpha, Slot{x, y});
          REQUIRE(split == oracle_splits(w, alpha, x, y));
          if (!split) continue;
          const Permutation ext = insert(w, Slot{x, y});
          REQUIRE(is_indecomposable(ext));
          REQUIRE(sd_measure(ext) < sd);
        }
      }
    });
  }
}

TEST_CASE("extend_to_simple examples") {
  const PermClass av321 = PermClass::parse("321");
  // 12 is itself simple, so it is returned unchanged.
  const auto same = extend_to_simple(Permutation{1, 2}, av321, 6);
  REQUIRE(same);
  CHECK(same->simple == Permutation{1, 2});
  CHECK(same->route == ExtensionRoute::already_simple);
  CHECK(same->chain.empty());
  // The length-4 alternative also qualifies.
  const Permutation alt{3, 1, 4, 2};
  CHECK(oracle::simple(alt));
  CHECK(oracle::avoids_all(alt, av321.basis()));
  CHECK(oracle::contains(Permutation{1, 2}, alt));

  const auto grown = extend_to_simple(Permutation{1, 2, 3}, PermClass::parse("4321"), 6);
  REQUIRE(grown);
  CHECK(oracle::simple(grown->simple));
  CHECK(oracle::contains(Permutation{1, 2, 3}, grown->simple));

  CHECK_FALSE(extend_to_simple(parse_permutation("25173486"),
                               PermClass::parse("251364"), 12));
  CHECK_THROWS_AS(extend_to_simple(Permutation{3, 2, 1}, av321, 6),
                  std::invalid_argument);
}

TEST_CASE("extend_to_simple chains are valid") {
  const std::vector<std::string> bases = {"321", "2413", "1324", "4231",
                                          "25314", "251364"};
  std::mt19937 rng(31);
  for (const std::string& b : bases) {
    const PermClass c = PermClass::parse(b);
    const auto members = enumerate_class(c, 7);
    for (int trial = 0; trial < 40; ++trial) {
      const Permutation& w = members[rng() % members.size()];
      const auto ext = extend_to_simple(w, c, w.size() + 4);
      if (!ext) continue;
      REQUIRE(oracle::simple(ext->simple));
      REQUIRE(oracle::avoids_all(ext->simple, c.basis()));
      REQUIRE(oracle::contains(w, ext->simple));
      if (ext->route != ExtensionRoute::interval_splitting) {
        CHECK(ext->chain.empty());
        continue;
      }
      Permutation current = ext->embedding ? ext->embedding->result() : w;
      for (const BreakReport& r : ext->chain) {
        check_report(current, c, r);
        current = r.extension;
      }
      CHECK(current == ext->simple);
    }
  }
}

TEST_CASE("exhaustive search finds the shortest simple extension") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"123", "321"}, {"132", "4231"}, {"2143", "2413"}, {"21", "321"},
      {"1243", "3142"}};
  for (const auto& [wt, bt] : cases) {
    const Permutation w = parse_permutation(wt);
    const PermClass c = PermClass::parse(bt);
    const auto got = exhaustive_simple_extension(w, c, 8);
    const auto want = oracle::simple_extension(w, c.basis(), 8);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(got->size() == want->size());
  }
}

TEST_CASE("condition (ddagger)") {
  CHECK(condition_ddagger(parse_permutation("153264")));
  CHECK_FALSE(condition_ddagger(parse_permutation("1432")));
  CHECK_FALSE(condition_ddagger(parse_permutation("15342")));
  CHECK_THROWS_AS(condition_ddagger(parse_permutation("2413")),
                  std::invalid_argument);
  CHECK_THROWS_AS(condition_ddagger(parse_permutation("1234")),
                  std::invalid_argument);
}

TEST_CASE("classifier examples") {
  auto verdict = [](std::string_view text) {
    return classify_principal(parse_permutation(text));
  };
  CHECK(verdict("123456").status == DeflationStatus::non_deflatable);
  CHECK(verdict("123456").rule == DeflationRule::three_sum);
  CHECK(rule_label(verdict("123456").rule) == "T3.1 three-sum");
  CHECK(verdict("2413").status == DeflationStatus::non_deflatable);
  CHECK(verdict("2413").rule == DeflationRule::avoid_2413);
  CHECK(verdict("251364").status == DeflationStatus::deflatable);
  CHECK(verdict("251364").rule == DeflationRule::witness_table);
  CHECK(verdict("25314").status == DeflationStatus::unknown);
  CHECK(verdict("1").status == DeflationStatus::deflatable);
  CHECK(rule_label(verdict("1").rule) == "degenerate");
  CHECK(verdict("21").rule == DeflationRule::base_monotone);
  CHECK(verdict("231").rule == DeflationRule::base_231);
  CHECK(verdict("321").status == DeflationStatus::non_deflatable);
  CHECK(verdict("1342").rule == DeflationRule::ascent_missing_bond);
  CHECK(verdict("1432").rule == DeflationRule::peak_no_increasing_bond);
  CHECK(verdict("2143").rule == DeflationRule::two_sum);

  // The reported symmetry maps pi onto a permutation the rule literally fits.
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      const TheoremVerdict v = classify_principal(pi);
      if (v.rule == DeflationRule::unknown) return;
      REQUIRE(rule_applies(v.rule, v.symmetry_used.apply(pi)));
    });
  }
}

TEST_CASE("classifier verdicts are symmetry-invariant") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      const TheoremVerdict v = classify_principal(pi);
      for (Symmetry f : Symmetry::all()) {
        const TheoremVerdict w = classify_principal(f.apply(pi));
        REQUIRE(w.status == v.status);
        REQUIRE(w.rule == v.rule);
      }
    });
  }
}

TEST_CASE("classifier soundness") {
  for (const WitnessRow& row : published_witnesses()) {
    for (Symmetry f : Symmetry::all()) {
      const Permutation pi = f.apply(row.basis.basis().front());
      CHECK(classify_principal(pi).status != DeflationStatus::non_deflatable);
    }
  }
  CHECK(classify_principal(Permutation{2, 4, 1, 3}).status !=
        DeflationStatus::deflatable);
  CHECK(classify_principal(Permutation{3, 2, 1}).status !=
        DeflationStatus::deflatable);
  const DeflationRule named_rules[] = {
      DeflationRule::three_sum,
      DeflationRule::two_sum,
      DeflationRule::ascent_missing_bond,
      DeflationRule::dagger_descent_no_increasing_bond,
      DeflationRule::peak_no_increasing_bond,
      DeflationRule::dagger_descent_no_decreasing_bond,
      DeflationRule::peak_no_decreasing_bond,
      DeflationRule::one_z_two};
  for (std::size_t n = 4; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      for (DeflationRule r : named_rules) {
        if (rule_applies(r, pi)) {
          REQUIRE(classify_principal(pi).status ==
                  DeflationStatus::non_deflatable);
        }
      }
    });
  }
}

TEST_CASE("empirical deflatability examples") {
  const DeflatabilityReport covered =
      empirical_deflatability(PermClass::parse("2413"), 5, 9);
  CHECK(covered.covered());
  CHECK(covered.members_checked == 1 + 2 + 6 + 23 + 103);

  const DeflatabilityReport av231 =
      empirical_deflatability(PermClass::parse("231"), 4, 10);
  CHECK_FALSE(av231.covered());
  for (const Permutation& p : av231.unextendable) CHECK(p.size() >= 3);
  CHECK(av231.unextendable.size() == 5 + 14);
  CHECK(av231.certificates.size() == av231.unextendable.size());

  const DeflatabilityReport av21 =
      empirical_deflatability(PermClass::parse("21"), 3, 5);
  CHECK_FALSE(av21.covered());
  CHECK(std::find(av21.unextendable.begin(), av21.unextendable.end(),
                  Permutation{1, 2, 3}) != av21.unextendable.end());

  CHECK_THROWS_AS(empirical_deflatability(PermClass::parse("21"), 6, 5),
                  std::invalid_argument);
}
