#include <doctest.h>

#include <set>

#include "strucvote/errors.hpp"
#include "support/oracles.hpp"

using namespace strucvote;

namespace
{

Permutation perm(std::vector<unsigned> images)
{
  return Permutation(std::move(images));
}

std::set<Ranking> orbit_members(Shape shape, Ranking const &r)
{
  std::set<Ranking> out;
  for (auto const &g : enumerate_group(shape))
    out.insert(apply_wreath_to_ranking(shape, g, r));
  return out;
}

} // namespace

TEST_CASE("committees in lexicographic order")
{
  auto const two = enumerate_committees({2, 2});
  REQUIRE(two.size() == 4);
  CHECK(two[0].label() == "(1_1,2_1)");
  CHECK(two[1].label() == "(1_1,2_2)");
  CHECK(two[2].label() == "(1_2,2_1)");
  CHECK(two[3].label() == "(1_2,2_2)");

  auto const single = enumerate_committees({1, 3});
  REQUIRE(single.size() == 1);
  CHECK(single[0].label() == "(1_1,2_1,3_1)");

  auto const three = enumerate_committees({3, 3});
  REQUIRE(three.size() == 27);
  CHECK(three[0].label() == "(1_1,2_1,3_1)");
  CHECK(three[1].label() == "(1_1,2_1,3_2)");
  CHECK(three[2].label() == "(1_1,2_1,3_3)");
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(three[i].index({3, 3}) == i);
    CHECK(Committee::from_index({3, 3}, i) == three[i]);
  }

  CHECK(Committee({1, 12}).label() == "(1_1,2_{12})");
  CHECK_THROWS_AS(enumerate_committees({100, 100}), SizeGuard);
  CHECK_THROWS_AS(enumerate_committees({0, 2}), InvalidInput);
}

TEST_CASE("disagreement")
{
  CHECK(disagreement(Committee({1, 1}), Committee({1, 1})) == 0);
  CHECK(disagreement(Committee({1, 1}), Committee({2, 2})) == 2);
  CHECK(disagreement(Committee({1, 2, 1}), Committee({1, 1, 1})) == 1);
  CHECK_THROWS_AS(disagreement(Committee({1, 1}), Committee({1, 1, 1})), DimensionMismatch);
}

TEST_CASE("wreath action on committees")
{
  Shape const shape{2, 2};
  Committee const w({1, 1});
  CHECK(apply_wreath(WreathElement::identity(shape), w) == w);

  WreathElement const swap_first{{perm({2, 1}), perm({1, 2})}, perm({1, 2})};
  CHECK(apply_wreath(swap_first, w) == Committee({2, 1}));

  WreathElement const swap_departments{{perm({1, 2}), perm({1, 2})}, perm({2, 1})};
  CHECK(apply_wreath(swap_departments, Committee({1, 2})) == Committee({2, 1}));

  // Department i of g.c is sigma_i of the choice c made in department pi^-1(i).
  Shape const big{3, 3};
  WreathElement const g{{perm({2, 3, 1}), perm({1, 3, 2}), perm({3, 2, 1})}, perm({2, 3, 1})};
  Committee const c({1, 2, 3});
  // pi^-1 = (3,1,2): department 1 reads c[3]=3, 2 reads c[1]=1, 3 reads c[2]=2.
  CHECK(apply_wreath(g, c) == Committee({1, 1, 2}));
  CHECK_THROWS_AS(apply_wreath(g, Committee({1, 1})), DimensionMismatch);
}

TEST_CASE("permutation and wreath products")
{
  Permutation const p = perm({2, 3, 1});
  Permutation const q = perm({1, 3, 2});
  CHECK((p * q)(2) == p(q(2)));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(perm({1, 1, 2}), InvalidInput);

  Shape const shape{3, 2};
  WreathElement const g{{perm({2, 1, 3}), perm({3, 1, 2})}, perm({2, 1})};
  CHECK((g * g.inverse()).is_identity());
  CHECK((g.inverse() * g).is_identity());
}

TEST_CASE("group enumeration")
{
  auto const two = enumerate_group({2, 2});
  CHECK(two.size() == 8);
  CHECK(std::set<WreathElement>(two.begin(), two.end()).size() == 8);
  CHECK(two.front().is_identity());

  auto const three = enumerate_group({2, 3});
  CHECK(three.size() == 48);
  CHECK(std::set<WreathElement>(three.begin(), three.end()).size() == 48);

  CHECK(enumerate_group({1, 1}).size() == 1);
  CHECK(Shape{3, 3}.group_order() == 1296);
  CHECK_THROWS_AS(enumerate_group({4, 4}), SizeGuard);
}

TEST_CASE("wreath action on rankings")
{
  Shape const shape{2, 2};
  auto const r = oracle::letters("WYXZ");
  CHECK(apply_wreath_to_ranking(shape, WreathElement::identity(shape), r) == r);

  WreathElement const g{{perm({2, 1}), perm({2, 1})}, perm({1, 2})};
  CHECK(apply_wreath_to_ranking(shape, g, r) == oracle::letters("ZXYW"));
}

TEST_CASE("the three m=n=2 orbits")
{
  Shape const shape{2, 2};
  auto const catalog = OrbitCatalog::get(shape);
  REQUIRE(catalog->orbits().size() == 3);

  for (unsigned label = 1; label <= 3; ++label) {
    std::set<Ranking> expected;
    for (auto const *s : oracle::two_by_two_orbits[label - 1])
      expected.insert(oracle::letters(s));
    REQUIRE(expected.size() == 8);

    Ranking const reference = oracle::letters(oracle::two_by_two_orbits[label - 1][0]);
    CHECK(orbit_members(shape, reference) == expected);

    OrbitInfo const info = orbit_of_ranking(shape, reference);
    CHECK(info.size == 8);
    CHECK(info.alias == label);
    CHECK(info.enumerated_id);
    CHECK(info.representative == *expected.begin());
    CHECK(info.id == orbit_id_for_alias(shape, label));

    std::size_t const index = resolve_orbit_index(*catalog, info.id);
    auto const members = catalog->members(index);
    CHECK(std::set<Ranking>(members.begin(), members.end()) == expected);
    CHECK(std::is_sorted(members.begin(), members.end()));
  }
  CHECK_THROWS_AS(resolve_orbit_index(*catalog, 3), InvalidInput);
}

TEST_CASE("orbit counts")
{
  CHECK(orbit_count({2, 2}) == 3);
  CHECK(orbit_count({3, 3}).get_str() == "8401905440137617408000000");
  CHECK(orbit_count({1, 5}) == 1);
  CHECK(orbit_count({2, 3}) == 840);
  CHECK_THROWS_AS(orbit_count({100, 100}), SizeGuard);
}

TEST_CASE("orbit enumeration")
{
  auto const two = enumerate_orbits({2, 2});
  REQUIRE(two.size() == 3);
  for (std::size_t i = 0; i < two.size(); ++i) {
    CHECK(two[i].size == 8);
    CHECK(two[i].id == i);
  }

  auto const three = enumerate_orbits({2, 3});
  REQUIRE(three.size() == 840);
  std::size_t total = 0;
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(three[i].size == 48);
    if (i > 0)
      CHECK(three[i - 1].representative < three[i].representative);
    total += three[i].size;
  }
  CHECK(BigInt(static_cast<unsigned long>(total)) == factorial(8));

  auto const trivial = enumerate_orbits({1, 1});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].size == 1);

  CHECK_THROWS_AS(enumerate_orbits({2, 4}), SizeGuard);
}

TEST_CASE("orbits above the enumeration cap")
{
  Shape const shape{2, 4};
  CHECK_FALSE(orbits_enumerable(shape));
  oracle::Random rng(7);
  Ranking const r = rng.ranking(16);
  OrbitInfo const info = orbit_of_ranking(shape, r);
  CHECK(info.size == 384);
  CHECK_FALSE(info.enumerated_id);
  CHECK(info.id == lexicographic_rank(info.representative));
  CHECK(info.representative <= r);

  WreathElement const g = rng.wreath(shape);
  OrbitInfo const moved = orbit_of_ranking(shape, apply_wreath_to_ranking(shape, g, r));
  CHECK(moved.id == info.id);
  CHECK(moved.representative == info.representative);
}

TEST_CASE("lexicographic rank of rankings")
{
  Ranking identity{{0, 1, 2, 3}};
  Ranking reversed{{3, 2, 1, 0}};
  CHECK(lexicographic_rank(identity) == 0);
  CHECK(lexicographic_rank(reversed) == 23);
  CHECK(ranking_from_lexicographic_rank(4, 23) == reversed);
  oracle::Random rng(11);
  for (int i = 0; i < 20; ++i) {
    Ranking const r = rng.ranking(9);
    CHECK(ranking_from_lexicographic_rank(9, lexicographic_rank(r)) == r);
  }
}

TEST_CASE("ranking validation")
{
  CHECK_THROWS_AS((Ranking{{0, 1, 2}}.validate({2, 2})), DimensionMismatch);
  CHECK_THROWS_AS((Ranking{{0, 1, 1, 3}}.validate({2, 2})), InvalidInput);
  CHECK_NOTHROW((Ranking{{3, 1, 0, 2}}.validate({2, 2})));
}
