#include <doctest.h>

#include "strucvote/errors.hpp"
#include "support/oracles.hpp"

using namespace strucvote;
using oracle::vec;

namespace
{

Shape const two{2, 2};

RatVector ivec(std::initializer_list<int> xs)
{
  return RatVector(std::vector<Rational>(xs.begin(), xs.end()));
}

RatVector const borda = vec({Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)});

ParadoxInstance instance(Shape shape, std::vector<RatVector> w, std::vector<RatVector> t,
                         OrbitId orbit)
{
  return {shape, std::move(w), std::move(t), std::move(orbit)};
}

RatVector random_sum_zero(oracle::Random &rng, std::size_t size)
{
  RatVector v = rng.vector(size);
  Rational const mean = v.sum() / Rational(static_cast<long>(size));
  for (auto &x : v)
    x -= mean;
  return v;
}

} // namespace

TEST_CASE("independence of weight projections")
{
  auto const single = check_weight_independence(two, std::vector{borda});
  REQUIRE(single.size() == 2);
  CHECK(single[0].k == 1);
  CHECK(single[0].independent);
  CHECK(single[0].rank == 1);
  CHECK(single[1].k == 2);
  CHECK_FALSE(single[1].independent);
  CHECK(single[1].all_vanish);

  auto const twice = check_weight_independence(two, std::vector{borda, borda});
  for (auto const &entry : twice)
    CHECK_FALSE(entry.independent);

  oracle::Random rng(17);
  Shape const shape{3, 2};
  std::vector<RatVector> weights;
  for (unsigned i = 0; i < shape.n * (shape.m - 1); ++i)
    weights.push_back(random_sum_zero(rng, 9));
  CHECK(check_weight_independence(shape, weights)[0].independent);

  CHECK_THROWS_AS(check_weight_independence(two, std::vector{ivec({1, -1})}), DimensionMismatch);

  // Placed by a representative, the same weights can gain a sign component.
  auto const placed = check_weight_independence(two, std::vector{borda}, {},
                                                OrbitCatalog::get(two)->orbits()[1].representative);
  CHECK(placed[1].independent);
}

TEST_CASE("a Borda paradox profile in each m=n=2 orbit")
{
  for (unsigned label = 1; label <= 3; ++label) {
    auto const inst = instance(two, {borda}, {ivec({1, -1, 1, -1})}, orbit_id_for_alias(two, label));
    auto const sol = construct_paradox_profile(inst);
    CHECK(verify_solution(inst, sol));
    CHECK(sol.solution_space_dim >= 1);

    auto const catalog = OrbitCatalog::get(two);
    std::size_t const index = resolve_orbit_index(*catalog, inst.orbit);
    for (auto const &[r, count] : sol.profile.votes)
      CHECK(catalog->orbit_index(r) == index);

    // Every direction of the solution space keeps the targets.
    auto const directions = solution_directions(inst);
    CHECK(directions.size() == sol.solution_space_dim);
    for (auto const &d : directions) {
      ParadoxSolution shifted = sol;
      for (auto const &[r, count] : d.votes)
        shifted.profile.votes[r] += Rational(5, 2) * count;
      CHECK(verify_solution(inst, shifted));
    }
  }
}

TEST_CASE("infeasible targets")
{
  // Borda on the orbit of the identity ranking misses the sign component.
  auto const sign = instance(two, {borda}, {ivec({1, -1, -1, 1})}, orbit_id_for_alias(two, 1));
  CHECK_THROWS_AS(construct_paradox_profile(sign), Infeasible);

  // Weights with both k=1 and k=2 parts still fail on orbit 2 for a sign target.
  RatVector const w = ivec({1, 0, -1, 0});
  CHECK_THROWS_AS(
    construct_paradox_profile(instance(two, {w}, {ivec({1, -1, -1, 1})}, orbit_id_for_alias(two, 2))),
    Infeasible);
  for (unsigned label : {1u, 3u}) {
    auto const inst = instance(two, {w}, {ivec({1, -1, -1, 1})}, orbit_id_for_alias(two, label));
    CHECK(verify_solution(inst, construct_paradox_profile(inst)));
  }

  // Two copies of one weight cannot reach two different targets.
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {borda, borda},
                                                     {ivec({1, -1, 1, -1}), ivec({1, 1, -1, -1})},
                                                     0)),
                  Infeasible);
}

TEST_CASE("invalid paradox instances")
{
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {ivec({1, 0, 0, 0})}, {RatVector(4)}, 0)),
                  InvalidInput);
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {borda}, {ivec({1, 0, 0, 0})}, 0)),
                  InvalidInput);
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {borda}, {}, 0)), InvalidInput);
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {borda}, {ivec({1, -1})}, 0)),
                  DimensionMismatch);
  CHECK_THROWS_AS(construct_paradox_profile(instance(two, {borda}, {RatVector(4)}, 7)),
                  InvalidInput);
  CHECK_THROWS_AS(
    construct_paradox_profile(instance({2, 4}, {RatVector(16)}, {RatVector(16)}, 0)), SizeGuard);
}

TEST_CASE("zero targets")
{
  auto const inst = instance(two, {borda}, {RatVector(4)}, 0);
  auto const sol = construct_paradox_profile(inst);
  CHECK(sol.profile.votes.empty());
  CHECK(verify_solution(inst, sol));
  auto const catalog = OrbitCatalog::get(two);
  RatMatrix const block = orbit_block(OrbitWeights::uniform(two, borda), *catalog, 0);
  CHECK(sol.solution_space_dim == 8 - rank(block));

  ParadoxSolution const empty{RankingProfile{two, {}}, 0};
  CHECK(verify_solution(inst, empty));
}

TEST_CASE("verification rejects altered profiles")
{
  auto const inst = instance(two, {borda}, {ivec({1, -1, 1, -1})}, 1);
  auto sol = construct_paradox_profile(inst);
  REQUIRE_FALSE(sol.profile.votes.empty());
  auto altered = sol;
  altered.profile.votes.begin()->second += 1;
  CHECK_FALSE(verify_solution(inst, altered));

  // A ranking from another orbit is outside the support.
  auto outside = sol;
  auto const other = OrbitCatalog::get(two)->members(0).front();
  outside.profile.votes[other] = 0;
  CHECK(verify_solution(inst, outside));
  outside.profile.votes[other] = 1;
  CHECK_FALSE(verify_solution(inst, outside));
}

TEST_CASE("random m=n=2 instances succeed whenever the hypotheses hold")
{
  oracle::Random rng(8675309);
  auto const catalog = OrbitCatalog::get(two);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t const j = static_cast<std::size_t>(rng.integer(1, 2));
    std::vector<RatVector> weights, targets;
    for (std::size_t i = 0; i < j; ++i) {
      weights.push_back(random_sum_zero(rng, 4));
      targets.push_back(random_sum_zero(rng, 4));
    }
    for (auto const &info : catalog->orbits()) {
      auto const independence = check_weight_independence(two, weights, {}, info.representative);
      // Drop target components the orbit's weights cannot reach independently.
      std::vector<RatVector> reachable;
      for (auto const &t : targets) {
        auto const parts = decompose_result(two, t);
        RatVector kept(4);
        for (auto const &entry : independence)
          if (entry.independent)
            kept += parts.components[entry.k];
        reachable.push_back(kept);
      }
      auto const inst = instance(two, weights, reachable, info.id);
      auto const sol = construct_paradox_profile(inst);
      CHECK(verify_solution(inst, sol));
      CHECK(sol.solution_space_dim > 0);
      ++solved;
    }
  }
  CHECK(solved == 120);
}

TEST_CASE("sampled m=2, n=3 orbits")
{
  Shape const shape{2, 3};
  oracle::Random rng(1001);
  auto const catalog = OrbitCatalog::get(shape);
  for (std::size_t index : {0u, 1u, 137u, 420u, 839u}) {
    auto const &info = catalog->orbits()[index];
    std::vector<RatVector> const weights = {random_sum_zero(rng, 8)};
    auto const independence = check_weight_independence(shape, weights, {}, info.representative);
    auto const parts = decompose_result(shape, random_sum_zero(rng, 8));
    RatVector target(8);
    for (auto const &entry : independence)
      if (entry.independent)
        target += parts.components[entry.k];
    auto const inst = instance(shape, weights, {target}, info.id);
    auto const sol = construct_paradox_profile(inst);
    CHECK(verify_solution(inst, sol));
    CHECK(sol.solution_space_dim > 0);
  }
}
