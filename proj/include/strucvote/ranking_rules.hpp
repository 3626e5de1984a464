#pragma once

#include <array>
#include <map>
#include <vector>

#include "strucvote/ballot_rules.hpp"
#include "strucvote/combinatorics.hpp"
#include "strucvote/decomposition.hpp"

/**
 * @file ranking_rules.hpp
 * @brief Rules on full rankings of committees with one position-weight
 * vector per orbit of rankings.
 *
 * A ranking r in orbit o gives weights[o][i] points to the committee it
 * places at position i. Weights of different orbits are unrelated.
 */

namespace strucvote
{

struct OrbitWeights
{
  Shape shape;
  std::map<OrbitId, RatVector> weights;
  RatVector fallback;  ///< used for every orbit absent from `weights`

  static OrbitWeights uniform(Shape shape, RatVector w);

  RatVector const &for_orbit(OrbitId const &id) const;

  void validate(Limits const &limits = {}) const;
};

struct RankingProfile
{
  Shape shape;
  std::map<Ranking, Rational> votes;  ///< multiplicities may be negative

  void add(Ranking r, Rational const &count);
};

struct OrbitEffectiveSpace
{
  OrbitInfo orbit;
  std::size_t rank = 0;
  /// Row space of the orbit block, in coordinates of the orbit's members
  /// (lexicographic order).
  std::vector<RatVector> row_space_basis;
  std::size_t kernel_dim = 0;
  /// Column space of the orbit block inside the committee space.
  std::vector<RatVector> image_in_results;
  std::vector<std::size_t> component_dims_of_image;  ///< indexed by k
  std::vector<unsigned> killed_components;  ///< k whose component misses the image
  bool weights_sum_zero = true;
  Rational trivial_coefficient;  ///< mean of the orbit's weight vector
};

struct EffectiveSpaceReport
{
  std::vector<OrbitEffectiveSpace> per_orbit;
  std::size_t total_image_rank = 0;
  std::vector<std::size_t> total_component_dims;
};

/// Points each committee receives from one ballot r.
RatVector ranking_scoring_row(OrbitWeights const &ow, Ranking const &r, Limits const &limits = {});

BallotTally tally_rankings(OrbitWeights const &ow, RankingProfile const &p,
                           Limits const &limits = {});

/// Scoring matrix restricted to orbit `index` of the catalog: one column per
/// member ranking.
RatMatrix orbit_block(OrbitWeights const &ow, OrbitCatalog const &catalog, std::size_t index);

EffectiveSpaceReport effective_space(OrbitWeights const &ow, Limits const &limits = {});

/// Coordinates of [a,b,c,d] in the basis [1,1,1,1], [1,-1,-1,1], [1,0,0,-1],
/// [0,1,-1,0].
struct WeightCoordinates
{
  Rational x1, x2, x3, x4;
};

WeightCoordinates weight_coordinates(RatVector const &w);

struct TwoByTwoOrbit
{
  OrbitId id;
  unsigned alias = 0;
  RatVector weights;
  WeightCoordinates x;
  /// Image dimension per component k = 0, 1, 2 as read off the coordinates.
  std::array<std::size_t, 3> predicted_dims{};
  std::array<std::size_t, 3> measured_dims{};
  std::vector<unsigned> killed_components;
};

struct TwoByTwoReport
{
  std::array<TwoByTwoOrbit, 3> orbits;  ///< orbits labelled 1, 2, 3
  bool predictions_match = false;
  EffectiveSpaceReport measured;
};

/// m=n=2 rule with weights w1, w2, w3 on the orbits labelled 1, 2, 3.
TwoByTwoReport analyze_2wr2(RatVector const &w1, RatVector const &w2, RatVector const &w3,
                            Limits const &limits = {});

/// Weights for the three m=n=2 orbits that undo the permutations relating
/// them: (a,b,c,d), (a,c,d,b), (a,d,c,b).
std::array<RatVector, 3> permute_weights_identical(RatVector const &w);

/// (m^n)! m^n / ((m!)^n n!)
BigInt parameter_count(Shape shape, Limits const &limits = {});

DecompositionReport decompose_position_weights(Shape shape, RatVector const &w,
                                               Limits const &limits = {});

} // namespace strucvote
