#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "partition_lab/families.hpp"
#include "partition_lab/maps.hpp"

using namespace partition_lab;

namespace {

constexpr auto B = Color::Blue;
constexpr auto G = Color::Green;

ColoredPartition cp(std::vector<Part> parts) { return canonicalize(std::move(parts)); }

}  // namespace

TEST_CASE("phi reproduces the worked pairs in both directions") {
  const std::pair<ColoredPartition, ColoredPartition> rows[] = {
      {cp({{8, B}, {1, B}}), cp({{4, B}, {4, B}, {1, B}})},
      {cp({{5, B}, {2, B}, {1, B}, {1, G}}),
       cp({{5, B}, {1, B}, {1, B}, {1, B}, {1, G}})},
      {cp({{8, B}, {8, B}, {3, B}, {3, B}, {3, B}, {1, B}, {1, B}, {1, G}}),
       cp({{16, B}, {3, B}, {3, B}, {3, B}, {1, B}, {1, B}, {1, G}})},
      {cp({{7, G}, {6, B}, {4, B}, {4, B}, {3, B}, {1, B}, {1, B}}),
       cp({{7, G}, {4, B}, {4, B}, {3, B}, {3, B}, {3, B}, {1, B}, {1, B}})},
  };
  for (const auto& [left, right] : rows) {
    CHECK(phi(left) == right);
    CHECK(phi(right) == left);
  }
}

TEST_CASE("phi rejects inputs outside pi_F minus pi_Q") {
  CHECK_THROWS_AS(phi(cp({{3, B}, {1, G}})), std::domain_error);   // in pi_Q
  CHECK_THROWS_AS(phi(cp({{2, G}})), std::domain_error);           // not in pi_F
  CHECK_THROWS_AS(phi(ColoredPartition{}), std::domain_error);
}

TEST_CASE("phi contracts hold everywhere; self-inverseness below weight 14") {
  for (long long n = 0; n <= 14; ++n) {
    for_each_member(FamilyId::F, n, [&](const ColoredPartition& lam) {
      if (member(FamilyId::Q, lam)) return;
      const ColoredPartition mu = phi(lam);
      CHECK(mu.weight() == n);
      CHECK(member(FamilyId::F, mu));
      CHECK_FALSE(member(FamilyId::Q, mu));
      CHECK((stats(lam).n_even_parts + stats(mu).n_even_parts) % 2 == 1);
      if (n <= 13) CHECK(phi(mu) == lam);
    });
  }
}

TEST_CASE("the literal phi rule is not self-inverse at weight 14") {
  // Both of these land in the 2-cycle (6b,4b,4b) <-> (4b,4b,3b,3b).
  const ColoredPartition a = cp({{8, B}, {3, B}, {3, B}});
  CHECK(phi(a) == cp({{4, B}, {4, B}, {3, B}, {3, B}}));
  CHECK(phi(phi(a)) == cp({{6, B}, {4, B}, {4, B}}));
  CHECK(phi(phi(a)) != a);

  const ColoredPartition b = cp({{8, B}, {6, B}});
  CHECK(phi(b) == cp({{6, B}, {4, B}, {4, B}}));
  CHECK(phi(phi(b)) != b);
}

TEST_CASE("overpartition relabeling") {
  CHECK(to_overpartition(ColoredPartition{}) == Overpartition{});
  CHECK(from_overpartition(Overpartition{}) == ColoredPartition{});
  CHECK(to_overpartition(cp({{3, B}, {1, G}, {1, G}})) ==
        canonicalize_over({{3, true}, {1, false}, {1, false}}));
  CHECK_THROWS_AS(to_overpartition(cp({{2, B}})), std::domain_error);
  CHECK_THROWS_AS(from_overpartition(canonicalize_over({{2, false}})), std::domain_error);

  for (long long n = 0; n <= 20; ++n) {
    std::set<Overpartition> images;
    for_each_member(FamilyId::Q, n, [&](const ColoredPartition& lam) {
      const Overpartition beta = to_overpartition(lam);
      CHECK(beta.weight() == n);
      CHECK(member(FamilyId::OverOdd, beta));
      CHECK(from_overpartition(beta) == lam);
      CHECK(images.insert(beta).second);
    });
    CHECK(images.size() == enumerate_over_family(FamilyId::OverOdd, n).size());
  }
}

TEST_CASE("color stripping and painting") {
  CHECK(strip_colors(cp({{3, B}, {2, G}, {2, G}, {1, B}})) == monochrome({3, 2, 2, 1}));
  CHECK(paint_colors(monochrome({5, 4, 4})) == cp({{5, B}, {4, G}, {4, G}}));
  CHECK_THROWS_AS(strip_colors(cp({{2, B}})), std::domain_error);
  CHECK_THROWS_AS(paint_colors(cp({{3, G}})), std::domain_error);

  for (long long n = 0; n <= 25; ++n) {
    std::set<ColoredPartition> images;
    for_each_member(FamilyId::R, n, [&](const ColoredPartition& lam) {
      const ColoredPartition mu = strip_colors(lam);
      CHECK(mu.weight() == n);
      CHECK(member(FamilyId::H, mu));
      CHECK(paint_colors(mu) == lam);
      CHECK(images.insert(mu).second);
    });
    CHECK(images.size() == enumerate_family(FamilyId::H, n).size());
  }
}

TEST_CASE("theta recolors the largest single-color even value") {
  const ColoredPartition left = cp({{5, B}, {4, B}, {3, B}, {2, G}, {2, B}});
  const ColoredPartition right = cp({{5, B}, {4, G}, {3, B}, {2, G}, {2, B}});
  CHECK(theta(left) == right);
  CHECK(theta(right) == left);
  CHECK(theta(cp({{2, B}})) == cp({{2, G}}));
  CHECK_THROWS_AS(theta(cp({{2, B}, {2, G}})), std::domain_error);  // not in pi_M

  for (long long n = 0; n <= 25; ++n) {
    for_each_member(FamilyId::M, n, [&](const ColoredPartition& lam) {
      const ColoredPartition mu = theta(lam);
      CHECK(mu.weight() == n);
      CHECK(member(FamilyId::M, mu));
      CHECK(mu != lam);
      CHECK(theta(mu) == lam);
      const PartitionStats a = stats(lam), b = stats(mu);
      CHECK((a.n_blue_even_parts + b.n_blue_even_parts) % 2 == 1);
      CHECK((a.n_blue_parts + b.n_blue_parts) % 2 == 1);
    });
  }
}

TEST_CASE("pair merge and split") {
  const ColoredPartition gamma = cp({{6, G}, {6, B}, {5, B}, {4, G}, {4, B},
                                     {3, B}, {2, G}, {2, B}, {1, B}});
  CHECK(pair_merge(gamma) == monochrome({12, 8, 5, 4, 3, 1}));
  CHECK(pair_split(monochrome({12, 8, 5, 4, 3, 1})) == gamma);
  CHECK(pair_split(monochrome({9, 7, 5, 4, 3, 1})) ==
        cp({{9, B}, {7, B}, {5, B}, {3, B}, {2, B}, {2, G}, {1, B}}));
  CHECK_THROWS_AS(pair_merge(cp({{5, B}, {4, B}})), std::domain_error);  // in pi_M
  CHECK_THROWS_AS(pair_split(cp({{6, B}, {1, B}})), std::domain_error);  // 6 != 0 mod 4

  for (long long n = 0; n <= 25; ++n) {
    std::set<ColoredPartition> images;
    long long domain = 0;
    for_each_member(FamilyId::L, n, [&](const ColoredPartition& lam) {
      if (member(FamilyId::M, lam)) return;
      ++domain;
      const ColoredPartition mu = pair_merge(lam);
      CHECK(mu.weight() == n);
      CHECK(member(FamilyId::N, mu));
      CHECK(stats(lam).n_blue_even_parts == stats(mu).n_even_parts);
      CHECK(pair_split(mu) == lam);
      CHECK(images.insert(mu).second);
    });
    CHECK(domain == static_cast<long long>(enumerate_family(FamilyId::N, n).size()));
    CHECK(images.size() == enumerate_family(FamilyId::N, n).size());
  }
}

TEST_CASE("modular diagram codec") {
  const ModularDiagram d1 = to_modular_diagram(monochrome({8, 5, 4, 3, 1}));
  CHECK(d1.lambda_e == std::vector<long long>{8, 4});
  CHECK(d1.lambda_c1 == std::vector<long long>{5, 1});
  CHECK(d1.lambda_c3 == std::vector<long long>{3});

  const ModularDiagram d2 = to_modular_diagram(monochrome({12, 8, 5, 4, 3, 1}));
  CHECK(d2.lambda_e == std::vector<long long>{12, 8, 4});
  CHECK(d2.lambda_c1 == std::vector<long long>{5, 1});
  CHECK(d2.lambda_c3 == std::vector<long long>{3});

  const ModularDiagram empty = to_modular_diagram(ColoredPartition{});
  CHECK(empty.lambda_e.empty());
  CHECK(empty.lambda_c1.empty());
  CHECK(empty.lambda_c3.empty());
  CHECK(from_modular_diagram(empty) == ColoredPartition{});

  for (long long n = 0; n <= 16; ++n) {
    for_each_member(FamilyId::N, n, [&](const ColoredPartition& p) {
      const ModularDiagram d = to_modular_diagram(p);
      CHECK(d.weight() == n);
      CHECK(from_modular_diagram(d) == p);
    });
  }

  CHECK_THROWS_AS(from_modular_diagram(ModularDiagram{{6}, {}, {}}),
                  std::invalid_argument);  // 6 is not a multiple of 4
  CHECK_THROWS_AS(from_modular_diagram(ModularDiagram{{}, {1, 5}, {}}),
                  std::invalid_argument);  // must strictly decrease
  CHECK_THROWS_AS(from_modular_diagram(ModularDiagram{{}, {3}, {}}),
                  std::invalid_argument);  // wrong residue class
  CHECK_THROWS_AS(to_modular_diagram(monochrome({6, 1})), std::domain_error);
}

TEST_CASE("diagram transformation reproduces the worked example") {
  const TransformOutcome forward = modular4_transform(monochrome({12, 8, 5, 4, 3, 1}));
  REQUIRE(forward.kind == TransformOutcome::Kind::Moved);
  CHECK(forward.result == monochrome({9, 8, 7, 5, 4}));
  const ModularDiagram d = to_modular_diagram(forward.result);
  CHECK(d.lambda_e == std::vector<long long>{8, 4});
  CHECK(d.lambda_c1 == std::vector<long long>{9, 5});
  CHECK(d.lambda_c3 == std::vector<long long>{7});

  const TransformOutcome backward = modular4_transform(monochrome({9, 8, 7, 5, 4}));
  REQUIRE(backward.kind == TransformOutcome::Kind::Moved);
  CHECK(backward.result == monochrome({12, 8, 5, 4, 3, 1}));
}

TEST_CASE("diagram transformation fixed points") {
  const TransformOutcome a = modular4_transform(monochrome({5, 1}));
  REQUIRE(a.kind == TransformOutcome::Kind::FixedStaircase);
  CHECK(a.staircase == StaircaseKind::C1Staircase);
  CHECK(a.k == 2);

  const TransformOutcome b = modular4_transform(monochrome({3}));
  REQUIRE(b.kind == TransformOutcome::Kind::FixedStaircase);
  CHECK(b.staircase == StaircaseKind::C3Staircase);
  CHECK(b.k == 1);

  const TransformOutcome c = modular4_transform(ColoredPartition{});
  REQUIRE(c.kind == TransformOutcome::Kind::FixedStaircase);
  CHECK(c.k == 0);

  CHECK_THROWS_AS(modular4_transform(monochrome({2})), std::domain_error);
}

TEST_CASE("diagram transformation is an involution off the staircases, to weight 40") {
  for (long long n = 0; n <= 40; ++n) {
    long long fixed = 0;
    for_each_member(FamilyId::N, n, [&](const ColoredPartition& mu) {
      const TransformOutcome out = modular4_transform(mu);
      if (out.kind == TransformOutcome::Kind::FixedStaircase) {
        ++fixed;
        // staircase weights: 2k^2 - k or 2k^2 + k
        const long long w = out.staircase == StaircaseKind::C1Staircase
                                ? 2 * out.k * out.k - out.k
                                : 2 * out.k * out.k + out.k;
        CHECK(w == n);
        return;
      }
      const ColoredPartition& nu = out.result;
      CHECK(nu.weight() == n);
      CHECK(member(FamilyId::N, nu));
      const long long e1 = stats(mu).n_even_parts;
      const long long e2 = stats(nu).n_even_parts;
      CHECK(std::abs(e1 - e2) == 1);
      const TransformOutcome back = modular4_transform(nu);
      REQUIRE(back.kind == TransformOutcome::Kind::Moved);
      CHECK(back.result == mu);
    });
    const long long expected = (n == 0 || is_triangular(n)) ? 1 : 0;
    CHECK(fixed == expected);
  }
}

TEST_CASE("cell layout for rendering") {
  // lambda_e=(8,4), c1=(5,1), c3=(3): lower triangle top-left, square below it,
  // split diagonal cell at (2,2)
  const DiagramCells cells = layout_cells(ModularDiagram{{8, 4}, {5, 1}, {3}});
  REQUIRE(cells.grid.size() == 2);
  REQUIRE(cells.grid[0].size() == 2);
  CHECK(cells.grid[0][0] == CellKind::LowerTriangle);
  CHECK(cells.grid[0][1] == CellKind::Empty);
  CHECK(cells.grid[1][0] == CellKind::Square);
  CHECK(cells.grid[1][1] == CellKind::SplitPair);

  // full staircase pair: every diagonal cell is split, off-diagonal cells square
  const DiagramCells big =
      layout_cells(ModularDiagram{{12, 8, 4}, {17, 13, 9, 5, 1}, {19, 15, 11, 7, 3}});
  REQUIRE(big.grid.size() == 5);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK(big.grid[r][c] == (r == c ? CellKind::SplitPair : CellKind::Square));
    }
  }

  CHECK(layout_cells(ModularDiagram{}).grid.empty());
}
