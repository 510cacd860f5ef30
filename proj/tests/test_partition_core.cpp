#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "partition_lab/families.hpp"
#include "partition_lab/partition.hpp"

using namespace partition_lab;

namespace {

ColoredPartition cp(std::vector<Part> parts) { return canonicalize(std::move(parts)); }

constexpr auto B = Color::Blue;
constexpr auto G = Color::Green;

// Independent membership predicates, restated from the definitions.
bool oracle_allows(FamilyId family, long long v, long long b, long long g) {
  const bool even = v % 2 == 0;
  switch (family) {
    case FamilyId::F: return even ? g == 0 : true;
    case FamilyId::Q: return even ? b + g == 0 : b <= 1;
    case FamilyId::G: return even ? true : g == 0;
    case FamilyId::R: return even ? b == 0 : (b <= 1 && g == 0);
    case FamilyId::H: return g == 0 && (even || b <= 1);
    case FamilyId::K: return g == 0 && b <= 1 && (!even || v % 4 == 2);
    case FamilyId::L: return b <= 1 && g <= (even ? 1 : 0);
    case FamilyId::N: return g == 0 && b <= 1 && (!even || v % 4 == 0);
    default: return false;
  }
}

}  // namespace

TEST_CASE("canonicalize sorts and validates") {
  const ColoredPartition p = cp({{1, B}, {8, B}});
  REQUIRE(p.parts().size() == 2);
  CHECK(p.parts()[0] == Part{8, B});
  CHECK(p.parts()[1] == Part{1, B});
  CHECK(p.weight() == 9);

  const ColoredPartition empty = cp({});
  CHECK(empty.empty());
  CHECK(empty.weight() == 0);

  const ColoredPartition tie = cp({{2, G}, {2, B}});
  CHECK(tie.parts()[0] == Part{2, B});  // Blue first at equal value
  CHECK(tie.parts()[1] == Part{2, G});

  CHECK_THROWS_AS(cp({{0, B}}), std::invalid_argument);
  CHECK_THROWS_AS(cp({{-3, G}}), std::invalid_argument);
}

TEST_CASE("overpartition canonical form") {
  const Overpartition p = canonicalize_over({{1, false}, {3, true}, {1, true}});
  CHECK(p.parts()[0] == OverlinedPart{3, true});
  CHECK(p.parts()[1] == OverlinedPart{1, true});
  CHECK(p.parts()[2] == OverlinedPart{1, false});
  CHECK_THROWS_AS(canonicalize_over({{2, true}, {2, true}}), std::invalid_argument);
}

TEST_CASE("membership examples") {
  CHECK(member(FamilyId::F, cp({{5, B}, {2, B}, {1, G}})));
  CHECK_FALSE(member(FamilyId::F, cp({{2, G}, {1, B}})));
  CHECK(member(FamilyId::N, monochrome({12, 8, 5, 4, 3, 1})));
  CHECK(member(FamilyId::M, cp({{5, B}, {4, B}, {3, B}, {2, G}, {2, B}})));
  CHECK_FALSE(member(FamilyId::M, cp({{3, B}, {2, G}, {2, B}})));  // 2 in both colors
  CHECK(member(FamilyId::Q, cp({{3, B}, {1, G}, {1, G}})));
  CHECK_FALSE(member(FamilyId::Q, cp({{3, B}, {3, B}})));
  CHECK(member(FamilyId::H, monochrome({5, 4, 4})));
  CHECK_FALSE(member(FamilyId::H, monochrome({5, 5})));
  CHECK_FALSE(member(FamilyId::H, cp({{5, G}})));  // monochrome families are Blue
  CHECK(member(FamilyId::K, monochrome({6, 5, 2})));
  CHECK_FALSE(member(FamilyId::K, monochrome({4, 3})));
  CHECK(member(FamilyId::L, cp({{6, G}, {6, B}, {5, B}})));  // per-color distinct
  CHECK_FALSE(member(FamilyId::L, cp({{5, B}, {5, B}})));
  CHECK_FALSE(member(FamilyId::L, cp({{3, G}})));
  CHECK(member(FamilyId::Over, canonicalize_over({{5, true}, {5, false}, {2, false}})));
  CHECK(member(FamilyId::OverOdd, canonicalize_over({{3, true}, {1, false}})));
  CHECK_FALSE(member(FamilyId::OverOdd, canonicalize_over({{2, false}})));
  CHECK_THROWS_AS(member(FamilyId::Over, cp({{1, B}})), std::invalid_argument);
}

TEST_CASE("stats examples") {
  const PartitionStats s = stats(cp({{5, B}, {2, B}, {1, G}}));
  CHECK(s.n_parts == 3);
  CHECK(s.n_even_parts == 1);
  CHECK(s.n_odd_parts == 2);
  CHECK(s.n_blue_parts == 2);
  CHECK(s.n_blue_even_parts == 1);
  CHECK(s.n_green_parts == 1);
  CHECK(s.sign == -1);

  const PartitionStats zero = stats(ColoredPartition{});
  CHECK(zero.n_parts == 0);
  CHECK(zero.sign == +1);

  // gamma from the worked merge example
  const PartitionStats g = stats(cp({{6, G}, {6, B}, {5, B}, {4, G}, {4, B},
                                     {3, B}, {2, G}, {2, B}, {1, B}}));
  CHECK(g.n_parts == 9);
  CHECK(g.n_blue_parts == 6);
  CHECK(g.n_blue_even_parts == 3);
}

TEST_CASE("is_triangular") {
  REQUIRE(is_triangular(0).has_value());
  CHECK(*is_triangular(0) == 0);
  CHECK(*is_triangular(6) == 3);
  CHECK(*is_triangular(1) == 1);
  CHECK(*is_triangular(10) == 4);
  CHECK_FALSE(is_triangular(7).has_value());
  CHECK_FALSE(is_triangular(2).has_value());
  CHECK_FALSE(is_triangular(-3).has_value());
  for (long long n = 0; n <= 500; ++n) {
    CHECK(is_triangular(n).has_value() == oracles::is_triangular_scan(n));
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  const FamilyId families[] = {FamilyId::F, FamilyId::Q, FamilyId::G, FamilyId::R,
                               FamilyId::H, FamilyId::K, FamilyId::L, FamilyId::M,
                               FamilyId::N};
  for (FamilyId family : families) {
    for (long long n = 0; n <= 10; ++n) {
      const std::vector<ColoredPartition> got = enumerate_family(family, n);
      std::set<ColoredPartition> got_set(got.begin(), got.end());
      CHECK(got_set.size() == got.size());  // no duplicates
      for (const ColoredPartition& p : got) {
        CHECK(member(family, p));
        CHECK(p.weight() == n);
      }
      std::set<ColoredPartition> expect;
      if (family == FamilyId::M) {
        for (const ColoredPartition& p : oracles::colored_partitions(
                 n, [](long long v, long long b, long long g) {
                   return oracle_allows(FamilyId::L, v, b, g);
                 })) {
          bool single_color_even = false;
          std::set<long long> blue, green;
          for (const Part& x : p.parts()) {
            (x.color == Color::Blue ? blue : green).insert(x.value % 2 == 0 ? x.value : 0);
          }
          for (long long v : blue) {
            if (v != 0 && !green.count(v)) single_color_even = true;
          }
          for (long long v : green) {
            if (v != 0 && !blue.count(v)) single_color_even = true;
          }
          if (single_color_even) expect.insert(p);
        }
      } else {
        for (const ColoredPartition& p : oracles::colored_partitions(
                 n, [&](long long v, long long b, long long g) {
                   return oracle_allows(family, v, b, g);
                 })) {
          expect.insert(p);
        }
      }
      CHECK(got_set == expect);
    }
  }
}

TEST_CASE("overpartition enumeration matches the oracle") {
  for (long long n = 0; n <= 10; ++n) {
    for (bool odd : {false, true}) {
      const FamilyId family = odd ? FamilyId::OverOdd : FamilyId::Over;
      const std::vector<Overpartition> got = enumerate_over_family(family, n);
      const std::vector<Overpartition> want = oracles::overpartitions(n, odd);
      std::set<Overpartition> got_set(got.begin(), got.end());
      std::set<Overpartition> want_set(want.begin(), want.end());
      CHECK(got_set.size() == got.size());
      CHECK(got_set == want_set);
    }
  }
  CHECK(enumerate_over_family(FamilyId::Over, 3).size() == 8);
  CHECK(enumerate_family(FamilyId::H, 5).size() == 4);
  CHECK(enumerate_family(FamilyId::F, 0).size() == 1);
  CHECK(enumerate_family(FamilyId::F, 0)[0].empty());
}

TEST_CASE("frozen small count tables") {
  // values frozen from an independent brute-force run
  const long long pbar[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504};
  const long long pbaro[] = {1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40, 52, 68};
  const long long g[] = {1, 1, 3, 4, 9, 12, 23, 31, 54, 73, 118, 159, 246};
  const long long h[] = {1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21, 28};
  const long long k[] = {1, 1, -1, 0, 1, 0, -1, -1, 2, 1, -2, -1, 2};
  const long long l[] = {1, 1, 2, 3, 4, 6, 9, 12, 16, 22, 29, 38, 50};
  const long long npi[] = {1, 1, 0, 1, 2, 2, 1, 2, 4, 4, 3, 4, 8};
  for (long long n = 0; n <= 12; ++n) {
    CHECK(count(FamilyId::Over, n) == pbar[n]);
    CHECK(count(FamilyId::OverOdd, n) == pbaro[n]);
    CHECK(count(FamilyId::F, n) == pbar[n]);        // two-route: F(n) = pbar(n)
    CHECK(count(FamilyId::Q, n) == pbaro[n]);
    CHECK(count(FamilyId::G, n) == g[n]);
    CHECK(count(FamilyId::H, n) == h[n]);
    CHECK(count(FamilyId::R, n) == h[n]);
    CHECK(count(FamilyId::K, n) == k[n]);
    CHECK(count(FamilyId::L, n) == l[n]);
    CHECK(count(FamilyId::N, n) == npi[n]);
  }
}

TEST_CASE("count filters and n = 0 conventions") {
  CHECK(count(FamilyId::F, 0) == 1);
  CHECK(count(FamilyId::F, 0, CountFilter::EvenPartsEven) == 1);
  CHECK(count(FamilyId::F, 0, CountFilter::EvenPartsOdd) == 0);
  CHECK(count(FamilyId::L, 6, CountFilter::BlueEvenPartsEven) -
            count(FamilyId::L, 6, CountFilter::BlueEvenPartsOdd) ==
        1);

  const CountFilter pairs[][2] = {
      {CountFilter::EvenPartsEven, CountFilter::EvenPartsOdd},
      {CountFilter::PartsEven, CountFilter::PartsOdd},
      {CountFilter::BluePartsEven, CountFilter::BluePartsOdd},
      {CountFilter::BlueEvenPartsEven, CountFilter::BlueEvenPartsOdd},
  };
  for (long long n = 0; n <= 10; ++n) {
    for (const auto& pair : pairs) {
      for (FamilyId family : {FamilyId::F, FamilyId::G, FamilyId::L}) {
        CHECK(count(family, n, pair[0]) + count(family, n, pair[1]) ==
              count(family, n, CountFilter::All));
      }
    }
  }
}

TEST_CASE("stats consistency on enumerated members") {
  for (long long n = 0; n <= 9; ++n) {
    for (FamilyId family : {FamilyId::F, FamilyId::G, FamilyId::L}) {
      for_each_member(family, n, [&](const ColoredPartition& p) {
        const PartitionStats s = stats(p);
        CHECK(s.n_parts == s.n_even_parts + s.n_odd_parts);
        CHECK(s.n_parts == s.n_blue_parts + s.n_green_parts);
        CHECK(s.sign == (s.n_even_parts % 2 == 0 ? 1 : -1));
      });
    }
  }
}

TEST_CASE("Q members never contain an even part") {
  for (long long n = 0; n <= 14; ++n) {
    for_each_member(FamilyId::Q, n, [&](const ColoredPartition& p) {
      CHECK(stats(p).n_even_parts == 0);
    });
  }
}

TEST_CASE("enumeration ceiling") {
  CHECK_THROWS_AS(enumerate_family(FamilyId::F, 41), enumeration_limit_error);
  CHECK_THROWS_AS(count(FamilyId::F, 21, CountFilter::All, 20), enumeration_limit_error);
  CHECK_THROWS_AS(enumerate_family(FamilyId::F, -1), std::invalid_argument);
  CHECK(count(FamilyId::N, 41, CountFilter::All, 60) > 0);  // raised ceiling works
}
