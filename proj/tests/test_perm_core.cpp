#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "permdeflate/permutation.hpp"
#include "permdeflate/symmetry.hpp"

using namespace permdeflate;

TEST_CASE("parse accepts spaced and compact text") {
  CHECK(parse_permutation("2 5 1 7 3 4 8 6") == Permutation{2, 5, 1, 7, 3, 4, 8, 6});
  CHECK(parse_permutation("25173486") == Permutation{2, 5, 1, 7, 3, 4, 8, 6});
  CHECK(parse_permutation("1") == Permutation{1});
  CHECK(parse_permutation("  3\t1 2\n") == Permutation{3, 1, 2});
  CHECK(format_permutation(Permutation{2, 3, 1}) == "2 3 1");
}

TEST_CASE("parse errors name the offending token") {
  auto message = [](std::string_view text) {
    try {
      parse_permutation(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("2 2 1").find("'2'") != std::string::npos);
  CHECK(message("1 2 4").find("'4'") != std::string::npos);
  CHECK(message("1 x 2").find("'x'") != std::string::npos);
  CHECK(message("") != "no error");
  CHECK(message("   ") != "no error");
  CHECK(message("0") != "no error");
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("format/parse round trip, both text styles") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const Permutation p = oracle::random_permutation(n, rng);
    CHECK(parse_permutation(format_permutation(p)) == p);
    if (n <= 9) {
      std::string compact;
      for (int v : p.values()) compact += static_cast<char>('0' + v);
      CHECK(parse_permutation(compact) == p);
    }
  }
}

TEST_CASE("contains returns the lexicographically least occurrence") {
  const Permutation host = parse_permutation("2531647");
  const auto occ = contains(Permutation{3, 1, 2}, host);
  REQUIRE(occ);
  // 5 3 4 at (2,3,6) precedes the 5 1 4 occurrence at (2,4,6).
  CHECK(occ->positions == std::vector<std::size_t>{2, 3, 6});
  CHECK(oracle::same_order({5, 1, 4}, {3, 1, 2}));
  CHECK(occ->positions == *oracle::first_occurrence(Permutation{3, 1, 2}, host));

  for (const Permutation& sigma : oracle::all_of_length(4)) {
    const auto single = contains(Permutation{1}, sigma);
    REQUIRE(single);
    CHECK(single->positions == std::vector<std::size_t>{1});
  }
  CHECK_FALSE(contains(Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2}));
}

TEST_CASE("contains agrees with the subset oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto hosts = oracle::all_of_length(n);
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      for (const Permutation& pat : oracle::all_of_length(k)) {
        for (const Permutation& host : hosts) {
          const auto got = contains(pat, host);
          const auto want = oracle::first_occurrence(pat, host);
          REQUIRE(got.has_value() == want.has_value());
          if (got) CHECK(got->positions == *want);
        }
      }
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation host = oracle::random_permutation(9 + rng() % 4, rng);
    const Permutation pat = oracle::random_permutation(3 + rng() % 3, rng);
    const auto got = contains(pat, host);
    const auto want = oracle::first_occurrence(pat, host);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(got->positions == *want);
  }
}

TEST_CASE("anchored containment matches restricted brute force") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const Permutation host = oracle::random_permutation(5 + rng() % 4, rng);
    const Permutation pat = oracle::random_permutation(2 + rng() % 3, rng);
    const std::size_t anchor = 1 + rng() % host.size();
    // Scan every k-subset of positions that includes the anchor.
    bool want = false;
    const std::size_t n = host.size(), k = pat.size();
    for (unsigned mask = 0; mask < (1u << n) && !want; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      if (!(mask >> (anchor - 1) & 1u)) continue;
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) sub.push_back(host[i]);
      }
      want = oracle::standardize(sub) == pat.to_vector();
    }
    CHECK(is_contained_through(pat, host, anchor) == want);
  }
}

TEST_CASE("containment is a partial order up to length 5") {
  std::vector<Permutation> all;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Permutation& p : oracle::all_of_length(n)) all.push_back(p);
  }
  const std::size_t m = all.size();
  std::vector<std::vector<char>> le(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) le[i][j] = is_contained(all[i], all[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(le[i][i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && le[i][j]) CHECK_FALSE(le[j][i]);
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (le[j][k] && !le[i][k]) FAIL("transitivity");
      }
    }
  }
}

TEST_CASE("symmetry examples and names") {
  CHECK(Symmetry(Symmetry::Name::inverse).apply(Permutation{2, 4, 1, 3}) ==
        Permutation{3, 1, 4, 2});
  CHECK(reverse(Permutation{1, 2, 3}) == Permutation{3, 2, 1});
  const Permutation w = parse_permutation("25173486");
  CHECK(apply_symmetry(w, Symmetry()) == w);
  CHECK(Symmetry::parse("reverse∘inverse") == Symmetry(Symmetry::Name::r));
  CHECK(Symmetry::parse("rc") == Symmetry(Symmetry::Name::r2));
  CHECK(Symmetry::parse("antidiagonal") ==
        Symmetry(Symmetry::Name::antidiagonal));
  CHECK_THROWS_AS(Symmetry::parse("twist"), ParseError);
  for (Symmetry s : Symmetry::all()) {
    CHECK(Symmetry::parse(s.to_string()) == s);
  }
}

TEST_CASE("symmetries match explicit point maps") {
  const auto syms = Symmetry::all();
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Permutation& p : oracle::all_of_length(n)) {
      for (std::size_t i = 0; i < 8; ++i) {
        REQUIRE(syms[i].apply(p) == oracle::apply_map(oracle::kMaps[i], p));
      }
    }
  }
}

TEST_CASE("group law on a permutation with eight distinct images") {
  const Permutation probe{2, 1, 4, 5, 3};
  const auto syms = Symmetry::all();
  std::set<Permutation> images;
  for (Symmetry s : syms) images.insert(s.apply(probe));
  REQUIRE(images.size() == 8);
  for (Symmetry a : syms) {
    CHECK(a.compose(a.inverted()) == Symmetry());
    for (Symmetry b : syms) {
      const Symmetry ab = a.compose(b);
      CHECK(ab.apply(probe) == a.apply(b.apply(probe)));
      CHECK(images.count(ab.apply(probe)) == 1);
    }
  }
}

TEST_CASE("containment is symmetry-equivariant up to length 6") {
  const auto syms = Symmetry::all();
  std::vector<Permutation> patterns;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const Permutation& p : oracle::all_of_length(k)) patterns.push_back(p);
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const Permutation& host : oracle::all_of_length(n)) {
      for (const Permutation& pat : patterns) {
        const bool base = is_contained(pat, host);
        for (Symmetry s : syms) {
          if (is_contained(s.apply(pat), s.apply(host)) != base) {
            FAIL("equivariance fails for " << pat.to_string() << " in "
                                           << host.to_string() << " under "
                                           << s.to_string());
          }
        }
      }
    }
  }
}

TEST_CASE("slot images under symmetry commute with insertion") {
  for (const Permutation& p : oracle::all_of_length(4)) {
    for (Symmetry s : Symmetry::all()) {
      for (std::size_t x = 1; x <= 5; ++x) {
        for (int y = 1; y <= 5; ++y) {
          const Slot slot{x, y};
          CHECK(s.apply(insert(p, slot)) == insert(s.apply(p), s.apply(slot, 4)));
        }
      }
    }
  }
}

TEST_CASE("insert examples") {
  CHECK(insert(Permutation{1, 2}, Slot{2, 1}) == Permutation{2, 1, 3});
  CHECK(insert(parse_permutation("564213"), Slot{7, 1}) ==
        parse_permutation("6753241"));
  CHECK(insert(Permutation{1}, Slot{1, 2}) == Permutation{2, 1});
  CHECK_THROWS_AS(insert(Permutation{1, 2}, Slot{4, 1}), std::out_of_range);
  CHECK_THROWS_AS(insert(Permutation{1, 2}, Slot{1, 0}), std::out_of_range);
}

TEST_CASE("insert and delete are inverse; slots give every extension once") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Permutation& p : oracle::all_of_length(n)) {
      std::map<Permutation, int> seen;
      for (std::size_t x = 1; x <= n + 1; ++x) {
        for (int y = 1; y <= static_cast<int>(n) + 1; ++y) {
          const Permutation q = insert(p, Slot{x, y});
          REQUIRE(q == oracle::insert_point(p, x, y));
          REQUIRE(remove_entry(q, x) == p);
          ++seen[q];
        }
      }
      // Every one-point extension of p arises from some slot.
      std::set<Permutation> extensions;
      for (const Permutation& q : oracle::all_of_length(n + 1)) {
        for (std::size_t pos = 1; pos <= n + 1; ++pos) {
          if (remove_entry(q, pos) == p) {
            extensions.insert(q);
            break;
          }
        }
      }
      CHECK(extensions.size() == seen.size());
    }
  }
}

TEST_CASE("bonds") {
  const auto b = bonds(parse_permutation("134652"));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Bond{2, BondKind::increasing, 3});
  CHECK(b[1] == Bond{4, BondKind::decreasing, 5});
  CHECK(bonds(Permutation{2, 4, 1, 3}).empty());
  REQUIRE(bonds(Permutation{1, 2}).size() == 1);
  CHECK(bonds(Permutation{1, 2})[0].kind == BondKind::increasing);
}

TEST_CASE("inflate and sums") {
  const std::vector<Permutation> parts = {{2, 1}, {1}, {1, 2}, {2, 1}};
  CHECK(inflate(Permutation{2, 4, 1, 3}, parts) == parse_permutation("4371265"));
  const Permutation sigma = parse_permutation("25173486");
  CHECK(inflate(sigma, std::vector<Permutation>(8, Permutation{1})) == sigma);
  const std::vector<Permutation> theta12 = {{1}, {1, 2}, {1}, {1}, {1}, {1}};
  const Permutation expected = parse_permutation("2561374");
  CHECK(inflate(parse_permutation("251364"), theta12) == expected);
  CHECK(oracle::inflate(parse_permutation("251364"), theta12) == expected);
  CHECK_THROWS_AS(inflate(Permutation{1, 2}, parts), std::invalid_argument);

  CHECK(direct_sum(Permutation{1}, Permutation{1}) == Permutation{1, 2});
  CHECK(skew_sum(parse_permutation("564213"), Permutation{1}) ==
        parse_permutation("6753241"));
  CHECK(direct_sum(Permutation{2, 1}, Permutation{1}) == Permutation{2, 1, 3});

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation skel = oracle::random_permutation(1 + rng() % 5, rng);
    std::vector<Permutation> ps;
    for (std::size_t i = 0; i < skel.size(); ++i) {
      ps.push_back(oracle::random_permutation(1 + rng() % 3, rng));
    }
    CHECK(inflate(skel, ps) == oracle::inflate(skel, ps));
  }
}

TEST_CASE("standardize and ordering") {
  const std::vector<int> keys = {40, 10, 30};
  CHECK(Permutation::standardize<int>(keys) == Permutation{3, 1, 2});
  CHECK(Permutation{2, 1} < Permutation{1, 2, 3});
  CHECK(Permutation{1, 3, 2} < Permutation{2, 1, 3});
  CHECK(Permutation{3, 1, 2}.inverse() == Permutation{2, 3, 1});
  CHECK(all_permutations(4).size() == 24);
}
