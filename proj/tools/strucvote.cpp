// Command-line front end: one subcommand per analysis, JSON or table output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strucvote/errors.hpp"
#include "strucvote/serialize.hpp"

using namespace strucvote;

namespace
{

enum ExitCode
{
  exit_ok = 0,
  exit_input = 1,
  exit_size_guard = 2,
  exit_infeasible = 3,
};

struct Config
{
  unsigned m = 2;
  unsigned n = 2;
  std::string format = "json";
  std::size_t cap_dim = Limits{}.max_dimension;
  std::uint64_t cap_fact = Limits{}.max_factorial;
  std::uint64_t cap_group = Limits{}.max_group_order;

  Shape shape() const
  {
    Shape s{m, n};
    s.validate();
    return s;
  }

  Limits limits() const { return {cap_dim, cap_fact, cap_group}; }
};

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(std::string const &text, std::string const &what)
{
  try {
    return Json::parse(text);
  } catch (Json::exception const &e) {
    throw InvalidInput("bad JSON in " + what + ": " + e.what());
  }
}

/// Inline JSON when the argument starts with '[' or '{', a file path otherwise.
Json json_argument(std::string const &arg, std::string const &what)
{
  auto const first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
    return parse_json(arg, what);
  return parse_json(read_file(arg), arg);
}

/// Either a flat vector or a list of vectors.
std::vector<RatVector> vector_list_argument(std::vector<std::string> const &args)
{
  std::vector<RatVector> out;
  for (auto const &arg : args) {
    auto const first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '[') {
      Json const j = parse_json(arg, "vector list");
      if (!j.empty() && j.front().is_array()) {
        for (auto const &v : j)
          out.push_back(vector_from_json(v));
        continue;
      }
      out.push_back(vector_from_json(j));
    } else {
      out.push_back(parse_vector_text(arg));
    }
  }
  return out;
}

std::string cell(Json const &v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ", " : "") + cell(v[i]);
    return s + "]";
  }
  return v.dump();
}

void print_rows(std::ostream &out, Json const &rows)
{
  if (rows.empty())
    return;
  std::vector<std::string> keys;
  for (auto const &[key, value] : rows.front().items())
    keys.push_back(key);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c)
    width[c] = keys[c].size();
  for (auto const &row : rows) {
    auto &line = cells.emplace_back();
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(row.contains(keys[c]) ? cell(row.at(keys[c])) : "");
      width[c] = std::max(width[c], line.back().size());
    }
  }

  auto emit = [&](std::vector<std::string> const &line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size())
        out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(keys);
  for (auto const &line : cells)
    emit(line);
}

bool is_row_list(Json const &j)
{
  if (!j.is_array() || j.empty())
    return false;
  for (auto const &row : j) {
    if (!row.is_object())
      return false;
  }
  return true;
}

void print_table(std::ostream &out, Json const &j)
{
  if (is_row_list(j)) {
    print_rows(out, j);
    return;
  }
  if (!j.is_object()) {
    out << cell(j) << '\n';
    return;
  }
  for (auto const &[key, value] : j.items()) {
    if (is_row_list(value)) {
      out << key << ":\n";
      print_rows(out, value);
    } else {
      out << key << ": " << cell(value) << '\n';
    }
  }
}

void emit(Config const &cfg, Json const &j)
{
  if (cfg.format == "table")
    print_table(std::cout, j);
  else
    std::cout << j.dump(2) << '\n';
}

Json committees_json(Shape shape, Limits const &limits)
{
  Json rows = Json::array();
  auto const committees = enumerate_committees(shape, limits);
  for (std::size_t i = 0; i < committees.size(); ++i) {
    Json row = {{"index", i}};
    row.update(to_json(committees[i]));
    rows.push_back(std::move(row));
  }
  return rows;
}

DistanceWeights distance_weights(Config const &cfg, std::string const &weights,
                                 std::string const &rule)
{
  if (!rule.empty()) {
    auto const named = parse_named_rule(rule);
    if (!named)
      throw InvalidInput("unknown rule \"" + rule + "\"");
    return named_weights(*named, cfg.shape());
  }
  if (weights.empty())
    throw InvalidInput("give --weights or --rule");
  DistanceWeights w{cfg.shape(), parse_vector_text(weights).entries()};
  w.validate();
  return w;
}

OrbitWeights orbit_weights(Config const &cfg, std::string const &weights,
                           std::string const &weights_file)
{
  if (!weights_file.empty())
    return orbit_weights_from_json(cfg.shape(), parse_json(read_file(weights_file), weights_file),
                                   cfg.limits());
  if (weights.empty())
    throw InvalidInput("give --weights or --weights-file");
  auto const first = weights.find_first_not_of(" \t\n");
  if (first != std::string::npos && weights[first] == '{')
    return orbit_weights_from_json(cfg.shape(), parse_json(weights, "--weights"), cfg.limits());
  OrbitWeights ow = OrbitWeights::uniform(cfg.shape(), parse_vector_text(weights));
  ow.validate(cfg.limits());
  return ow;
}

Ranking parse_ranking_text(std::string const &text)
{
  Ranking r;
  for (auto const &x : parse_vector_text(text)) {
    if (!x.is_integer() || x.sign() < 0 || !x.numerator().fits_uint_p())
      throw InvalidInput("ranking entries are committee indices");
    r.order.push_back(static_cast<std::uint32_t>(x.numerator().get_ui()));
  }
  return r;
}

Json matrix_json(RatMatrix const &m)
{
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(to_json(m.row(r)));
  return rows;
}

int run(CLI::App &app, int argc, char **argv)
{
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  } catch (SizeGuard const &e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return exit_size_guard;
  } catch (Infeasible const &e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return exit_infeasible;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_ok;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact analysis of structured-committee voting rules"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--m", cfg.m, "candidates per department")->check(CLI::PositiveNumber);
  app.add_option("--n", cfg.n, "number of departments")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
    ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cap-dim", cfg.cap_dim, "largest allowed m^n")->check(CLI::PositiveNumber);
  app.add_option("--cap-fact", cfg.cap_fact, "largest allowed (m^n)!")
    ->check(CLI::PositiveNumber);
  app.add_option("--cap-group", cfg.cap_group, "largest allowed (m!)^n n!")
    ->check(CLI::PositiveNumber);
  app.fallthrough();

  auto *committees = app.add_subcommand("committees", "list committees with their indices");
  committees->callback([&] { emit(cfg, committees_json(cfg.shape(), cfg.limits())); });

  unsigned k_opt = 0;
  auto *profile_cmd = app.add_subcommand("distance-profile", "values of b_C by disagreement");
  auto *k_flag = profile_cmd->add_option("--k", k_opt, "component (all when omitted)");
  profile_cmd->callback([&] {
    Shape const shape = cfg.shape();
    if (*k_flag) {
      emit(cfg, to_json(distance_profile(shape, k_opt)));
      return;
    }
    Json rows = Json::array();
    for (unsigned k = 0; k <= shape.n; ++k)
      rows.push_back(to_json(distance_profile(shape, k)));
    emit(cfg, rows);
  });

  std::string vector_text, vector_file;
  auto *decompose = app.add_subcommand("decompose", "split a results vector into components");
  decompose->add_option("--vector", vector_text, "entries, e.g. 9,5,6,10");
  decompose->add_option("--vector-file", vector_file, "JSON array file");
  decompose->callback([&] {
    RatVector v = !vector_file.empty()
                    ? vector_from_json(parse_json(read_file(vector_file), vector_file))
                    : vector_text.empty() ? throw InvalidInput("give --vector or --vector-file")
                                          : parse_vector_text(vector_text);
    emit(cfg, to_json(decompose_result(cfg.shape(), v, cfg.limits())));
  });

  std::string weights_text, weights_file, rule_name;
  auto *schur = app.add_subcommand("schur", "Schur parameters of a ballot rule");
  schur->add_option("--weights", weights_text, "a[0],...,a[n]");
  schur->add_option("--rule", rule_name, "named rule instead of --weights");
  schur->callback([&] {
    emit(cfg, to_json(schur_parameters(distance_weights(cfg, weights_text, rule_name),
                                       cfg.limits())));
  });

  std::string profile_arg;
  auto *tally_ballots = app.add_subcommand("tally-ballots", "tally single-committee ballots");
  tally_ballots->add_option("--weights", weights_text, "a[0],...,a[n]");
  tally_ballots->add_option("--rule", rule_name, "named rule instead of --weights");
  tally_ballots->add_option("--profile", profile_arg, "JSON array or {index: count}, inline or file")
    ->required();
  tally_ballots->callback([&] {
    auto const w = distance_weights(cfg, weights_text, rule_name);
    auto const p = ballot_profile_from_json(cfg.shape(), json_argument(profile_arg, "--profile"),
                                            cfg.limits());
    auto const analysis = analyze_rule_on_profile(w, p, cfg.limits());
    Json out = to_json(tally_committee_ballots(w, p, cfg.limits()));
    out["lambda"] = to_json(analysis.parameters)["lambda"];
    out["profile_components"] = to_json(analysis.profile)["components"];
    out["score_components"] = to_json(analysis.scores)["components"];
    emit(cfg, out);
  });

  auto *tally_rank = app.add_subcommand("tally-rankings", "tally full-ranking ballots");
  tally_rank->add_option("--weights", weights_text, "position weights for every orbit");
  tally_rank->add_option("--weights-file", weights_file, "per-orbit weights JSON");
  tally_rank->add_option("--profile", profile_arg, "[{ranking, count}], inline or file")
    ->required();
  tally_rank->callback([&] {
    auto const ow = orbit_weights(cfg, weights_text, weights_file);
    auto const p = ranking_profile_from_json(cfg.shape(), json_argument(profile_arg, "--profile"));
    emit(cfg, to_json(tally_rankings(ow, p, cfg.limits())));
  });

  auto *orbits = app.add_subcommand("orbits", "orbits of rankings under the wreath product");
  orbits->callback([&] {
    Json rows = Json::array();
    for (auto const &info : enumerate_orbits(cfg.shape(), cfg.limits()))
      rows.push_back(to_json(info));
    emit(cfg, rows);
  });

  std::string ranking_text;
  auto *orbit_of = app.add_subcommand("orbit-of", "orbit of one ranking");
  orbit_of->add_option("--ranking", ranking_text, "committee indices, best first")->required();
  orbit_of->callback([&] {
    emit(cfg, to_json(orbit_of_ranking(cfg.shape(), parse_ranking_text(ranking_text),
                                       cfg.limits())));
  });

  bool with_bases = false;
  auto *effective = app.add_subcommand("effective", "image and kernel of a ranking rule by orbit");
  effective->add_option("--weights", weights_text, "position weights for every orbit");
  effective->add_option("--weights-file", weights_file, "per-orbit weights JSON");
  effective->add_flag("--bases", with_bases, "include image and row-space bases");
  effective->callback([&] {
    Json out = to_json(effective_space(orbit_weights(cfg, weights_text, weights_file),
                                       cfg.limits()));
    if (!with_bases) {
      for (auto &o : out["orbits"]) {
        o.erase("image_basis");
        o.erase("row_space_basis");
      }
    }
    emit(cfg, out);
  });

  std::string w1, w2, w3;
  auto *two = app.add_subcommand("analyze-2wr2", "m=n=2 rule with weights per labelled orbit");
  two->add_option("--w1", w1, "weights on O1")->required();
  two->add_option("--w2", w2, "weights on O2")->required();
  two->add_option("--w3", w3, "weights on O3")->required();
  two->callback([&] {
    emit(cfg, to_json(analyze_2wr2(parse_vector_text(w1), parse_vector_text(w2),
                                   parse_vector_text(w3), cfg.limits())));
  });

  std::string instance_arg, orbit_arg;
  std::vector<std::string> paradox_weights, paradox_targets;
  bool with_directions = false;
  auto *paradox = app.add_subcommand("paradox", "profile on one orbit meeting several targets");
  paradox->add_option("--instance", instance_arg, "{weights, targets, orbit}, inline or file");
  paradox->add_option("--weights", paradox_weights, "weight vector (repeatable)");
  paradox->add_option("--targets", paradox_targets, "target vector (repeatable)");
  paradox->add_option("--orbit", orbit_arg, "orbit id or O1/O2/O3");
  paradox->add_flag("--directions", with_directions, "include the solution-space basis");
  paradox->callback([&] {
    Shape const shape = cfg.shape();
    ParadoxInstance inst;
    if (!instance_arg.empty()) {
      inst = paradox_instance_from_json(shape, json_argument(instance_arg, "--instance"),
                                        cfg.limits());
    } else {
      if (orbit_arg.empty())
        throw InvalidInput("give --instance or --orbit with --weights and --targets");
      inst.shape = shape;
      inst.weights = vector_list_argument(paradox_weights);
      inst.targets = vector_list_argument(paradox_targets);
    }
    if (!orbit_arg.empty()) {
      auto const all_digits = orbit_arg.find_first_not_of("0123456789") == std::string::npos;
      inst.orbit = orbit_id_from_json(shape, all_digits ? Json(BigInt(orbit_arg).get_str())
                                                        : Json(orbit_arg),
                                      cfg.limits());
    }
    auto const sol = construct_paradox_profile(inst, cfg.limits());
    Json out = to_json(sol);
    out["verified"] = verify_solution(inst, sol, cfg.limits());
    if (with_directions) {
      Json dirs = Json::array();
      for (auto const &d : solution_directions(inst, cfg.limits()))
        dirs.push_back(to_json(d));
      out["directions"] = dirs;
    }
    emit(cfg, out);
  });

  std::size_t committee_a = 0, committee_b = 0;
  auto *distance = app.add_subcommand("distance", "departments where two committees disagree");
  distance->add_option("--a", committee_a, "committee index")->required();
  distance->add_option("--b", committee_b, "committee index")->required();
  distance->callback([&] {
    Shape const shape = cfg.shape();
    auto const a = Committee::from_index(shape, committee_a);
    auto const b = Committee::from_index(shape, committee_b);
    emit(cfg, Json{{"a", to_json(a)}, {"b", to_json(b)}, {"disagreement", disagreement(a, b)}});
  });

  auto *rule_weights = app.add_subcommand("rule-weights", "distance weights of a named rule");
  rule_weights->add_option("--rule", rule_name, "rule name")->required();
  rule_weights->callback([&] {
    auto const w = distance_weights(cfg, "", rule_name);
    emit(cfg, Json{{"rule", rule_name}, {"weights", to_json(RatVector(w.a))}});
  });

  std::optional<std::size_t> row_index;
  auto *matrix = app.add_subcommand("scoring-matrix", "ballot scoring matrix, row per committee");
  matrix->add_option("--weights", weights_text, "a[0],...,a[n]");
  matrix->add_option("--rule", rule_name, "named rule instead of --weights");
  matrix->add_option("--row", row_index, "print only this committee's row");
  matrix->callback([&] {
    auto const m = scoring_matrix(distance_weights(cfg, weights_text, rule_name), cfg.limits());
    if (!row_index) {
      emit(cfg, matrix_json(m));
      return;
    }
    auto const c = Committee::from_index(cfg.shape(), *row_index);
    emit(cfg, Json{{"committee", to_json(c)}, {"row", to_json(m.row(*row_index))}});
  });

  unsigned basis_k = 0;
  std::optional<std::size_t> target_index;
  auto *basis = app.add_subcommand("component-basis", "spanning vectors b_C of one component");
  basis->add_option("--k", basis_k, "component")->required();
  basis->add_option("--target", target_index, "print only b_C for this committee index");
  basis->callback([&] {
    Shape const shape = cfg.shape();
    if (basis_k > shape.n)
      throw InvalidInput("k exceeds n");
    if (target_index) {
      auto const v = component_vector(shape, basis_k, Committee::from_index(shape, *target_index),
                                      cfg.limits());
      emit(cfg, Json{{"k", basis_k}, {"target", to_json(v.target)}, {"vector", to_json(v.vector)}});
      return;
    }
    std::vector<RatVector> vectors;
    for (auto &b : component_spanning_set(shape, basis_k, cfg.limits()))
      vectors.push_back(std::move(b.vector));
    emit(cfg, Json{{"k", basis_k},
                   {"dimension", to_json(component_dimension(shape, basis_k))},
                   {"spanning_vectors", vectors.size()},
                   {"rank", span_dimension(vectors)}});
  });

  auto *ranking_row = app.add_subcommand("ranking-row", "points one ranking gives each committee");
  ranking_row->add_option("--weights", weights_text, "position weights for every orbit");
  ranking_row->add_option("--weights-file", weights_file, "per-orbit weights JSON");
  ranking_row->add_option("--ranking", ranking_text, "committee indices, best first")->required();
  ranking_row->callback([&] {
    auto const ow = orbit_weights(cfg, weights_text, weights_file);
    auto const r = parse_ranking_text(ranking_text);
    emit(cfg, Json{{"ranking", to_json(r)},
                   {"orbit", to_json(orbit_of_ranking(cfg.shape(), r, cfg.limits()))},
                   {"row", to_json(ranking_scoring_row(ow, r, cfg.limits()))}});
  });

  auto *permute = app.add_subcommand("permute-weights",
                                     "m=n=2 weights moved so every orbit ranks alike");
  permute->add_option("--weights", weights_text, "weights on O1")->required();
  permute->callback([&] {
    auto const [p1, p2, p3] = permute_weights_identical(parse_vector_text(weights_text));
    emit(cfg, Json{{"O1", to_json(p1)}, {"O2", to_json(p2)}, {"O3", to_json(p3)}});
  });

  auto *params = app.add_subcommand("param-count", "orbit and parameter counts");
  params->callback([&] {
    Shape const shape = cfg.shape();
    emit(cfg, Json{{"m", shape.m},
                   {"n", shape.n},
                   {"orbit_count", to_json(orbit_count(shape, cfg.limits()))},
                   {"parameter_count", to_json(parameter_count(shape, cfg.limits()))}});
  });

  return run(app, argc, argv);
}
