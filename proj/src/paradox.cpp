#include "strucvote/paradox.hpp"

#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

RatVector placed_on(Ranking const &representative, RatVector const &w)
{
  RatVector v(w.size());
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    v[representative.order[pos]] = w[pos];
  return v;
}

struct OrbitSystem
{
  std::size_t index = 0;
  std::vector<Ranking> members;
  RatMatrix matrix;
  RatVector rhs;
};

OrbitSystem build_system(ParadoxInstance const &inst, OrbitCatalog const &catalog)
{
  OrbitSystem system;
  system.index = resolve_orbit_index(catalog, inst.orbit);
  system.members = catalog.members(system.index);

  std::size_t const count = inst.shape.committee_count();
  system.matrix = RatMatrix(inst.weights.size() * count, system.members.size());
  system.rhs = RatVector(inst.weights.size() * count);

  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    RatMatrix const block =
      orbit_block(OrbitWeights::uniform(inst.shape, inst.weights[i]), catalog, system.index);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t j = 0; j < block.cols(); ++j)
        system.matrix(i * count + c, j) = block(c, j);
      system.rhs[i * count + c] = inst.targets[i][c];
    }
  }
  return system;
}

RankingProfile profile_from(Shape shape, std::vector<Ranking> const &members, RatVector const &x)
{
  RankingProfile profile{shape, {}};
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (!x[j].is_zero())
      profile.votes.emplace(members[j], x[j]);
  }
  return profile;
}

} // anonymous namespace

void ParadoxInstance::validate(Limits const &limits) const
{
  shape.validate();
  std::size_t const count = shape.committee_count(limits);
  if (weights.size() != targets.size()) {
    throw InvalidInput(std::to_string(weights.size()) + " weight vectors but " +
                       std::to_string(targets.size()) + " targets");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != count || targets[i].size() != count) {
      throw DimensionMismatch("weights and targets need " + std::to_string(count) +
                              " entries (pair " + std::to_string(i) + ")");
    }
    if (!weights[i].sum().is_zero())
      throw InvalidInput("weight vector " + std::to_string(i) + " does not sum to zero");
    if (!targets[i].sum().is_zero())
      throw InvalidInput("target " + std::to_string(i) + " does not sum to zero");
  }
}

std::vector<ComponentIndependence>
check_weight_independence(Shape shape, std::span<RatVector const> weights, Limits const &limits,
                          std::optional<Ranking> const &representative)
{
  std::size_t const count = shape.committee_count(limits);
  if (representative)
    representative->validate(shape);

  std::vector<std::vector<RatVector>> projections(shape.n + 1);
  for (auto const &w : weights) {
    if (w.size() != count) {
      throw DimensionMismatch("weight vector has " + std::to_string(w.size()) +
                              " entries, expected " + std::to_string(count));
    }
    auto const report =
      decompose_result(shape, representative ? placed_on(*representative, w) : w, limits);
    for (unsigned k = 0; k <= shape.n; ++k)
      projections[k].push_back(report.components[k]);
  }

  std::vector<ComponentIndependence> result;
  for (unsigned k = 1; k <= shape.n; ++k) {
    ComponentIndependence entry;
    entry.k = k;
    entry.rank = span_dimension(projections[k]);
    entry.independent = entry.rank == weights.size();
    entry.all_vanish = entry.rank == 0;
    result.push_back(entry);
  }
  return result;
}

ParadoxSolution construct_paradox_profile(ParadoxInstance const &inst, Limits const &limits)
{
  inst.validate(limits);
  auto const catalog = OrbitCatalog::get(inst.shape, limits);
  std::size_t const index = resolve_orbit_index(*catalog, inst.orbit);
  Ranking const &representative = catalog->orbits()[index].representative;

  auto const independence =
    check_weight_independence(inst.shape, inst.weights, limits, representative);
  for (auto const &entry : independence) {
    bool needed = false;
    for (auto const &target : inst.targets) {
      if (!decompose_result(inst.shape, target, limits).components[entry.k].is_zero())
        needed = true;
    }
    if (!needed || entry.independent)
      continue;
    if (entry.all_vanish) {
      throw Infeasible("a target has a nonzero k=" + std::to_string(entry.k) +
                       " component but no weight reaches that component on this orbit");
    }
    throw Infeasible("weight projections onto k=" + std::to_string(entry.k) +
                     " are linearly dependent on this orbit");
  }

  OrbitSystem const system = build_system(inst, *catalog);
  auto const x = try_solve(system.matrix, system.rhs);
  if (!x)
    throw Infeasible("no profile on this orbit reaches the targets");

  return {profile_from(inst.shape, system.members, *x),
          system.members.size() - rank(system.matrix)};
}

std::vector<RankingProfile> solution_directions(ParadoxInstance const &inst, Limits const &limits)
{
  inst.validate(limits);
  auto const catalog = OrbitCatalog::get(inst.shape, limits);
  OrbitSystem const system = build_system(inst, *catalog);

  std::vector<RankingProfile> directions;
  for (auto const &v : nullspace(system.matrix))
    directions.push_back(profile_from(inst.shape, system.members, v));
  return directions;
}

bool verify_solution(ParadoxInstance const &inst, ParadoxSolution const &sol, Limits const &limits)
{
  try {
    inst.validate(limits);
    if (!(sol.profile.shape == inst.shape))
      return false;
    auto const catalog = OrbitCatalog::get(inst.shape, limits);
    std::size_t const index = resolve_orbit_index(*catalog, inst.orbit);
    for (auto const &[ranking, count] : sol.profile.votes) {
      if (!count.is_zero() && catalog->orbit_index(ranking) != index)
        return false;
    }
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
      auto const tally =
        tally_rankings(OrbitWeights::uniform(inst.shape, inst.weights[i]), sol.profile, limits);
      if (tally.scores != inst.targets[i])
        return false;
    }
    return true;
  } catch (Error const &) {
    return false;
  }
}

} // namespace strucvote
