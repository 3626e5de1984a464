#pragma once

#include <optional>
#include <span>
#include <vector>

#include "strucvote/ranking_rules.hpp"

/**
 * @file paradox.hpp
 * @brief Profiles on a single orbit that make several weight vectors
 * produce prescribed results at once.
 */

namespace strucvote
{

struct ParadoxInstance
{
  Shape shape;
  std::vector<RatVector> weights;  ///< position weights, each summing to zero
  std::vector<RatVector> targets;  ///< results, each summing to zero
  OrbitId orbit;

  /// Sizes and sum-zero conditions; throws InvalidInput or DimensionMismatch.
  void validate(Limits const &limits = {}) const;
};

struct ParadoxSolution
{
  RankingProfile profile;
  std::size_t solution_space_dim = 0;
};

struct ComponentIndependence
{
  unsigned k = 0;
  std::size_t rank = 0;  ///< rank of the projections onto component k
  bool independent = false;
  bool all_vanish = true;
};

/**
 * Projects every weight vector onto components k = 1..n and reports whether
 * the projections are linearly independent.
 *
 * Without `representative` the weights are read as vectors in the committee
 * space position by position. With it, weight position i is placed on the
 * committee the representative ranks i-th, which is how the weights act on
 * that representative's orbit.
 */
std::vector<ComponentIndependence>
check_weight_independence(Shape shape, std::span<RatVector const> weights,
                          Limits const &limits = {},
                          std::optional<Ranking> const &representative = std::nullopt);

/// First solution of the per-orbit linear system. Throws Infeasible when the
/// weights cannot reach the targets on this orbit.
ParadoxSolution construct_paradox_profile(ParadoxInstance const &inst, Limits const &limits = {});

/// Basis of profiles on the orbit that every weight tallies to zero.
std::vector<RankingProfile> solution_directions(ParadoxInstance const &inst,
                                                Limits const &limits = {});

bool verify_solution(ParadoxInstance const &inst, ParadoxSolution const &sol,
                     Limits const &limits = {});

} // namespace strucvote
