#include "strucvote/ranking_rules.hpp"

#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

OrbitId orbit_id_of(Shape shape, Ranking const &r, Limits const &limits)
{
  if (orbits_enumerable(shape, limits))
    return OrbitCatalog::get(shape, limits)->orbit_index(r);
  return orbit_of_ranking(shape, r, limits).id;
}

void require_length_four(RatVector const &w)
{
  if (w.size() != 4)
    throw WrongSize("m=n=2 weight vectors have 4 entries, got " + std::to_string(w.size()));
}

std::size_t nonzero(bool flag, std::size_t dim)
{
  return flag ? dim : 0;
}

} // anonymous namespace

OrbitWeights OrbitWeights::uniform(Shape shape, RatVector w)
{
  return {shape, {}, std::move(w)};
}

RatVector const &OrbitWeights::for_orbit(OrbitId const &id) const
{
  auto it = weights.find(id);
  return it == weights.end() ? fallback : it->second;
}

void OrbitWeights::validate(Limits const &limits) const
{
  std::size_t const count = shape.committee_count(limits);
  if (fallback.size() != count) {
    throw DimensionMismatch("default weight vector has " + std::to_string(fallback.size()) +
                            " entries, expected m^n = " + std::to_string(count));
  }
  for (auto const &[id, w] : weights) {
    if (w.size() != count) {
      throw DimensionMismatch("weights for orbit " + id.get_str() + " have " +
                              std::to_string(w.size()) + " entries, expected " +
                              std::to_string(count));
    }
  }
}

void RankingProfile::add(Ranking r, Rational const &count)
{
  r.validate(shape);
  auto &slot = votes[std::move(r)];
  slot += count;
}

RatVector ranking_scoring_row(OrbitWeights const &ow, Ranking const &r, Limits const &limits)
{
  ow.validate(limits);
  r.validate(ow.shape);

  RatVector const &w =
    ow.weights.empty() ? ow.fallback : ow.for_orbit(orbit_id_of(ow.shape, r, limits));

  RatVector row(r.order.size());
  for (std::size_t pos = 0; pos < r.order.size(); ++pos)
    row[r.order[pos]] = w[pos];
  return row;
}

BallotTally tally_rankings(OrbitWeights const &ow, RankingProfile const &p, Limits const &limits)
{
  if (!(ow.shape == p.shape))
    throw DimensionMismatch("weights and profile describe different m, n");

  std::size_t const count = ow.shape.committee_count(limits);
  RatVector scores(count);
  for (auto const &[ranking, multiplicity] : p.votes) {
    if (multiplicity.is_zero())
      continue;
    scores.add_scaled(multiplicity, ranking_scoring_row(ow, ranking, limits));
  }
  return make_tally(ow.shape, std::move(scores));
}

RatMatrix orbit_block(OrbitWeights const &ow, OrbitCatalog const &catalog, std::size_t index)
{
  auto const members = catalog.members(index);
  RatVector const &w = ow.for_orbit(catalog.orbits().at(index).id);

  RatMatrix block(w.size(), members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    auto const &order = members[j].order;
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      block(order[pos], j) = w[pos];
  }
  return block;
}

EffectiveSpaceReport effective_space(OrbitWeights const &ow, Limits const &limits)
{
  ow.validate(limits);
  Shape const shape = ow.shape;
  auto const catalog = OrbitCatalog::get(shape, limits);
  std::size_t const count = shape.committee_count(limits);

  std::vector<std::vector<RatVector>> component_bases;
  for (unsigned k = 0; k <= shape.n; ++k) {
    std::vector<RatVector> spanning;
    for (auto &b : component_spanning_set(shape, k, limits))
      spanning.push_back(std::move(b.vector));
    component_bases.push_back(row_space_basis(RatMatrix::from_rows(spanning)));
  }

  auto component_dims = [&](std::vector<RatVector> const &vectors) {
    std::vector<std::size_t> dims;
    for (auto const &basis : component_bases) {
      std::vector<RatVector> projected;
      for (auto const &v : vectors)
        projected.push_back(project_onto_span(basis, v));
      dims.push_back(span_dimension(projected));
    }
    return dims;
  };

  EffectiveSpaceReport report;
  std::vector<RatVector> all_images;
  for (std::size_t index = 0; index < catalog->orbits().size(); ++index) {
    OrbitEffectiveSpace entry;
    entry.orbit = catalog->orbits()[index];

    RatMatrix const block = orbit_block(ow, *catalog, index);
    RowEchelon const echelon = row_reduce(block);
    entry.rank = echelon.rank();
    for (std::size_t i = 0; i < echelon.rank(); ++i)
      entry.row_space_basis.push_back(echelon.reduced.row(i));
    entry.kernel_dim = block.cols() - entry.rank;
    entry.image_in_results = column_space_basis(block);
    entry.component_dims_of_image = component_dims(entry.image_in_results);
    for (unsigned k = 0; k <= shape.n; ++k) {
      if (entry.component_dims_of_image[k] == 0)
        entry.killed_components.push_back(k);
    }

    RatVector const &w = ow.for_orbit(entry.orbit.id);
    entry.weights_sum_zero = w.sum().is_zero();
    entry.trivial_coefficient = w.sum() / Rational(count);

    all_images.insert(all_images.end(), entry.image_in_results.begin(),
                      entry.image_in_results.end());
    report.per_orbit.push_back(std::move(entry));
  }

  auto const total_basis = all_images.empty()
                             ? std::vector<RatVector>{}
                             : row_space_basis(RatMatrix::from_rows(all_images));
  report.total_image_rank = total_basis.size();
  report.total_component_dims = component_dims(total_basis);
  return report;
}

WeightCoordinates weight_coordinates(RatVector const &w)
{
  require_length_four(w);
  Rational const &a = w[0], &b = w[1], &c = w[2], &d = w[3];
  return {(a + b + c + d) / 4, (a - b - c + d) / 4, (a - d) / 2, (b - c) / 2};
}

TwoByTwoReport analyze_2wr2(RatVector const &w1, RatVector const &w2, RatVector const &w3,
                            Limits const &limits)
{
  std::array<RatVector const *, 3> const inputs = {&w1, &w2, &w3};
  for (auto const *w : inputs)
    require_length_four(*w);

  Shape const shape{2, 2};
  OrbitWeights ow{shape, {}, RatVector(4)};

  TwoByTwoReport report;
  for (unsigned label = 1; label <= 3; ++label) {
    auto &orbit = report.orbits[label - 1];
    orbit.alias = label;
    orbit.id = orbit_id_for_alias(shape, label, limits);
    orbit.weights = *inputs[label - 1];
    orbit.x = weight_coordinates(orbit.weights);
    ow.weights[orbit.id] = orbit.weights;

    auto const &x = orbit.x;
    orbit.predicted_dims[0] = nonzero(!x.x1.is_zero(), 1);
    switch (label) {
    case 1:
      orbit.predicted_dims[1] = nonzero(!x.x3.is_zero() || !x.x4.is_zero(), 2);
      orbit.predicted_dims[2] = nonzero(!x.x2.is_zero(), 1);
      break;
    case 2:
      orbit.predicted_dims[1] = nonzero(!x.x2.is_zero() || x.x3 != -x.x4, 2);
      orbit.predicted_dims[2] = nonzero(x.x3 != x.x4, 1);
      break;
    case 3:
      orbit.predicted_dims[1] = nonzero(!x.x2.is_zero() || x.x3 != x.x4, 2);
      orbit.predicted_dims[2] = nonzero(x.x3 != -x.x4, 1);
      break;
    }
  }

  report.measured = effective_space(ow, limits);
  report.predictions_match = true;
  for (auto &orbit : report.orbits) {
    auto const &measured = report.measured.per_orbit.at(orbit.id.get_ui());
    for (unsigned k = 0; k < 3; ++k) {
      orbit.measured_dims[k] = measured.component_dims_of_image[k];
      if (orbit.measured_dims[k] != orbit.predicted_dims[k])
        report.predictions_match = false;
    }
    orbit.killed_components = measured.killed_components;
  }
  return report;
}

std::array<RatVector, 3> permute_weights_identical(RatVector const &w)
{
  require_length_four(w);
  Rational const &a = w[0], &b = w[1], &c = w[2], &d = w[3];
  return {RatVector{a, b, c, d}, RatVector{a, c, d, b}, RatVector{a, d, c, b}};
}

BigInt parameter_count(Shape shape, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  return orbit_count(shape, limits) * static_cast<unsigned long>(count);
}

DecompositionReport decompose_position_weights(Shape shape, RatVector const &w,
                                               Limits const &limits)
{
  return decompose_result(shape, w, limits);
}

} // namespace strucvote
