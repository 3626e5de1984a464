#pragma once

#include <string_view>

#include <json.hpp>

#include "strucvote/paradox.hpp"

/**
 * @file serialize.hpp
 * @brief JSON forms of the library's values.
 *
 * Rationals are written as "p" or "p/q" strings and read from strings or
 * JSON integers. Big integers are JSON integers when they fit in 64 bits and
 * decimal strings otherwise.
 */

namespace strucvote
{

using Json = nlohmann::ordered_json;

Json to_json(Rational const &q);
Json to_json(BigInt const &z);
Json to_json(RatVector const &v);
Json to_json(Committee const &c);
Json to_json(Ranking const &r);
Json to_json(OrbitInfo const &info);
Json to_json(DistanceProfile const &p);
Json to_json(DecompositionReport const &report);
Json to_json(SchurParameters const &p);
Json to_json(BallotTally const &t);
Json to_json(RankingProfile const &p);
Json to_json(EffectiveSpaceReport const &report);
Json to_json(TwoByTwoReport const &report);
Json to_json(ParadoxSolution const &sol);

Rational rational_from_json(Json const &j);
BigInt bigint_from_json(Json const &j);
RatVector vector_from_json(Json const &j);

/// "1,0,-1/2" or a JSON array.
RatVector parse_vector_text(std::string_view text);

/// An integer id, or "O1", "O2", "O3" for the labelled m=n=2 orbits.
OrbitId orbit_id_from_json(Shape shape, Json const &j, Limits const &limits = {});

Ranking ranking_from_json(Shape shape, Json const &j);

/// Either one array (the same weights on every orbit) or
/// {"default": [...], "orbits": {"<id>": [...]}}. A missing default is zero.
OrbitWeights orbit_weights_from_json(Shape shape, Json const &j, Limits const &limits = {});

/// [{"ranking": [...], "count": q}, ...]
RankingProfile ranking_profile_from_json(Shape shape, Json const &j);

/// A dense array of m^n multiplicities or {"<index>": q, ...}.
RatVector ballot_profile_from_json(Shape shape, Json const &j, Limits const &limits = {});

/// {"weights": [[...]], "targets": [[...]], "orbit": id}
ParadoxInstance paradox_instance_from_json(Shape shape, Json const &j, Limits const &limits = {});

} // namespace strucvote
