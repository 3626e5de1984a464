#include "strucvote/serialize.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

Json vectors_to_json(std::vector<RatVector> const &vs)
{
  Json out = Json::array();
  for (auto const &v : vs)
    out.push_back(to_json(v));
  return out;
}

Json const &require(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<RatVector> vector_list(Json const &j, char const *what)
{
  if (!j.is_array())
    throw InvalidInput(std::string(what) + " must be an array of vectors");
  std::vector<RatVector> out;
  for (auto const &v : j)
    out.push_back(vector_from_json(v));
  return out;
}

std::size_t index_from_string(std::string const &s)
{
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("bad committee index \"" + s + "\"");
  return std::stoull(s);
}

} // anonymous namespace

Json to_json(Rational const &q)
{
  return q.str();
}

Json to_json(BigInt const &z)
{
  if (z.fits_slong_p())
    return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(RatVector const &v)
{
  Json out = Json::array();
  for (auto const &x : v)
    out.push_back(to_json(x));
  return out;
}

Json to_json(Committee const &c)
{
  return {{"label", c.label()}, {"choices", c.choices()}};
}

Json to_json(Ranking const &r)
{
  return r.order;
}

Json to_json(OrbitInfo const &info)
{
  Json out = {{"id", to_json(info.id)}};
  if (info.alias)
    out["alias"] = "O" + std::to_string(*info.alias);
  out["size"] = info.size;
  out["representative"] = to_json(info.representative);
  return out;
}

Json to_json(DistanceProfile const &p)
{
  Json values = Json::array();
  for (auto const &x : p.values)
    values.push_back(to_json(x));
  return {{"m", p.shape.m}, {"n", p.shape.n}, {"k", p.k}, {"values", values}};
}

Json to_json(DecompositionReport const &report)
{
  Json norms = Json::array();
  for (auto const &x : report.norms_squared)
    norms.push_back(to_json(x));
  return {{"input", to_json(report.input)},
          {"components", vectors_to_json(report.components)},
          {"norms_squared", norms}};
}

Json to_json(SchurParameters const &p)
{
  Json lambda = Json::array();
  for (auto const &x : p.lambda)
    lambda.push_back(to_json(x));
  return {{"lambda", lambda}};
}

Json to_json(BallotTally const &t)
{
  Json winners = Json::array();
  for (auto const &c : t.winners)
    winners.push_back(c.label());
  return {{"scores", to_json(t.scores)}, {"winners", winners}};
}

Json to_json(RankingProfile const &p)
{
  Json out = Json::array();
  for (auto const &[ranking, count] : p.votes)
    out.push_back({{"ranking", to_json(ranking)}, {"count", to_json(count)}});
  return out;
}

Json to_json(EffectiveSpaceReport const &report)
{
  Json orbits = Json::array();
  for (auto const &entry : report.per_orbit) {
    Json o = to_json(entry.orbit);
    o["rank"] = entry.rank;
    o["kernel_dim"] = entry.kernel_dim;
    o["component_dims"] = entry.component_dims_of_image;
    o["killed_components"] = entry.killed_components;
    o["weights_sum_zero"] = entry.weights_sum_zero;
    o["trivial_coefficient"] = to_json(entry.trivial_coefficient);
    o["image_basis"] = vectors_to_json(entry.image_in_results);
    o["row_space_basis"] = vectors_to_json(entry.row_space_basis);
    orbits.push_back(std::move(o));
  }
  return {{"orbits", orbits},
          {"total_image_rank", report.total_image_rank},
          {"total_component_dims", report.total_component_dims}};
}

Json to_json(TwoByTwoReport const &report)
{
  Json orbits = Json::array();
  for (auto const &o : report.orbits) {
    orbits.push_back({{"id", to_json(o.id)},
                      {"alias", "O" + std::to_string(o.alias)},
                      {"weights", to_json(o.weights)},
                      {"x", {to_json(o.x.x1), to_json(o.x.x2), to_json(o.x.x3), to_json(o.x.x4)}},
                      {"predicted_dims", o.predicted_dims},
                      {"measured_dims", o.measured_dims},
                      {"killed_components", o.killed_components}});
  }
  return {{"orbits", orbits},
          {"predictions_match", report.predictions_match},
          {"total_image_rank", report.measured.total_image_rank},
          {"total_component_dims", report.measured.total_component_dims}};
}

Json to_json(ParadoxSolution const &sol)
{
  return {{"profile", to_json(sol.profile)}, {"solution_space_dim", sol.solution_space_dim}};
}

Rational rational_from_json(Json const &j)
{
  if (j.is_string())
    return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return Rational(j.get<std::uint64_t>());
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_number_float())
    throw InvalidInput("floating-point number " + j.dump() + "; write it as a \"p/q\" string");
  throw InvalidInput("expected a rational, got " + j.dump());
}

BigInt bigint_from_json(Json const &j)
{
  Rational const q = rational_from_json(j);
  if (!q.is_integer())
    throw InvalidInput("expected an integer, got " + j.dump());
  return q.numerator();
}

RatVector vector_from_json(Json const &j)
{
  if (!j.is_array())
    throw InvalidInput("expected an array, got " + j.dump());
  std::vector<Rational> entries;
  for (auto const &x : j)
    entries.push_back(rational_from_json(x));
  return RatVector(std::move(entries));
}

RatVector parse_vector_text(std::string_view text)
{
  auto const first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::exception const &e) {
      throw InvalidInput(std::string("bad JSON vector: ") + e.what());
    }
    return vector_from_json(j);
  }

  std::vector<Rational> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto const comma = text.find(',', start);
    auto const end = comma == std::string_view::npos ? text.size() : comma;
    auto item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (item.empty())
      throw InvalidInput("empty entry in vector \"" + std::string(text) + "\"");
    entries.push_back(Rational::parse(item));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return RatVector(std::move(entries));
}

OrbitId orbit_id_from_json(Shape shape, Json const &j, Limits const &limits)
{
  if (j.is_string()) {
    auto const s = j.get<std::string>();
    if (s.size() == 2 && s[0] == 'O' && s[1] >= '1' && s[1] <= '3')
      return orbit_id_for_alias(shape, static_cast<unsigned>(s[1] - '0'), limits);
  }
  BigInt id = bigint_from_json(j);
  if (id < 0)
    throw InvalidInput("orbit id must be nonnegative");
  return id;
}

Ranking ranking_from_json(Shape shape, Json const &j)
{
  if (!j.is_array())
    throw InvalidInput("a ranking is an array of committee indices");
  Ranking r;
  for (auto const &x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 ||
        x.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
      throw InvalidInput("bad committee index " + x.dump() + " in ranking");
    r.order.push_back(x.get<std::uint32_t>());
  }
  r.validate(shape);
  return r;
}

OrbitWeights orbit_weights_from_json(Shape shape, Json const &j, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  if (j.is_array()) {
    OrbitWeights ow = OrbitWeights::uniform(shape, vector_from_json(j));
    ow.validate(limits);
    return ow;
  }
  if (!j.is_object())
    throw InvalidInput("weights must be an array or an object");

  OrbitWeights ow{shape, {}, RatVector(count)};
  if (j.contains("default"))
    ow.fallback = vector_from_json(j.at("default"));
  if (j.contains("orbits")) {
    auto const &orbits = j.at("orbits");
    if (!orbits.is_object())
      throw InvalidInput("\"orbits\" must map orbit ids to weight vectors");
    for (auto const &[key, value] : orbits.items())
      ow.weights[orbit_id_from_json(shape, Json(key), limits)] = vector_from_json(value);
  }
  ow.validate(limits);
  return ow;
}

RankingProfile ranking_profile_from_json(Shape shape, Json const &j)
{
  if (!j.is_array())
    throw InvalidInput("a ranking profile is an array of {ranking, count} entries");
  RankingProfile p{shape, {}};
  for (auto const &entry : j)
    p.add(ranking_from_json(shape, require(entry, "ranking")),
          rational_from_json(require(entry, "count")));
  return p;
}

RatVector ballot_profile_from_json(Shape shape, Json const &j, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  if (j.is_array()) {
    RatVector p = vector_from_json(j);
    if (p.size() != count) {
      throw DimensionMismatch("ballot profile has " + std::to_string(p.size()) +
                              " entries, expected " + std::to_string(count));
    }
    return p;
  }
  if (!j.is_object())
    throw InvalidInput("ballot profile must be an array or an object");
  RatVector p(count);
  for (auto const &[key, value] : j.items()) {
    std::size_t const index = index_from_string(key);
    if (index >= count)
      throw InvalidInput("committee index " + key + " out of range");
    p[index] += rational_from_json(value);
  }
  return p;
}

ParadoxInstance paradox_instance_from_json(Shape shape, Json const &j, Limits const &limits)
{
  ParadoxInstance inst;
  inst.shape = shape;
  inst.weights = vector_list(require(j, "weights"), "weights");
  inst.targets = vector_list(require(j, "targets"), "targets");
  inst.orbit = orbit_id_from_json(shape, require(j, "orbit"), limits);
  return inst;
}

} // namespace strucvote
