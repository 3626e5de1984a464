#include "strucvote/ballot_rules.hpp"

#include <array>
#include <string>
#include <utility>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

std::array<std::pair<NamedRule, std::string_view>, 6> const rule_names = {{
  {NamedRule::borda_like, "borda_like"},
  {NamedRule::approval_nondisjoint, "approval_nondisjoint"},
  {NamedRule::complement_pair, "complement_pair"},
  {NamedRule::parity_even, "parity_even"},
  {NamedRule::alternating, "alternating"},
  {NamedRule::first_last, "first_last"},
}};

// scores[c] = sum_{c'} p[c'] a[d(c', c)], skipping committees with no ballots.
RatVector apply_distance_weights(DistanceWeights const &w, RatVector const &p,
                                 Limits const &limits)
{
  std::size_t const count = w.shape.committee_count(limits);
  if (p.size() != count) {
    throw DimensionMismatch("profile has dimension " + std::to_string(p.size()) +
                            ", expected m^n = " + std::to_string(count));
  }

  auto const committees = enumerate_committees(w.shape, limits);
  RatVector scores(count);
  for (std::size_t src = 0; src < count; ++src) {
    if (p[src].is_zero())
      continue;
    for (std::size_t dst = 0; dst < count; ++dst)
      scores[dst].add_product(p[src], w.a[disagreement(committees[src], committees[dst])]);
  }
  return scores;
}

} // anonymous namespace

void DistanceWeights::validate() const
{
  shape.validate();
  if (a.size() != shape.n + 1) {
    throw DimensionMismatch("distance weights need n+1 = " + std::to_string(shape.n + 1) +
                            " entries, got " + std::to_string(a.size()));
  }
}

std::optional<NamedRule> parse_named_rule(std::string_view name)
{
  for (auto const &[rule, text] : rule_names) {
    if (text == name)
      return rule;
  }
  return std::nullopt;
}

std::string to_string(NamedRule rule)
{
  for (auto const &[r, text] : rule_names) {
    if (r == rule)
      return std::string(text);
  }
  return {};
}

RatMatrix scoring_matrix(DistanceWeights const &w, Limits const &limits)
{
  w.validate();
  auto const committees = enumerate_committees(w.shape, limits);

  RatMatrix m(committees.size(), committees.size());
  for (std::size_t c = 0; c < committees.size(); ++c) {
    for (std::size_t other = 0; other < committees.size(); ++other)
      m(c, other) = w.a[disagreement(committees[other], committees[c])];
  }
  return m;
}

BallotTally make_tally(Shape shape, RatVector scores)
{
  BallotTally tally;
  if (scores.size() > 0) {
    Rational best = scores[0];
    for (auto const &s : scores) {
      if (s > best)
        best = s;
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] == best)
        tally.winners.push_back(Committee::from_index(shape, i));
    }
  }
  tally.scores = std::move(scores);
  return tally;
}

BallotTally tally_committee_ballots(DistanceWeights const &w, RatVector const &p,
                                    Limits const &limits)
{
  w.validate();
  return make_tally(w.shape, apply_distance_weights(w, p, limits));
}

SchurParameters schur_parameters(DistanceWeights const &w, Limits const &limits)
{
  w.validate();
  Committee const target = Committee::from_index(w.shape, 0);

  SchurParameters params;
  for (unsigned k = 0; k <= w.shape.n; ++k) {
    auto const b = component_vector(w.shape, k, target, limits).vector;
    auto const image = apply_distance_weights(w, b, limits);

    // b[target] = C(n,k)(m-1)^k, zero only when the component is trivial (m=1).
    if (b[0].is_zero()) {
      params.lambda.emplace_back(0);
      continue;
    }

    Rational const lambda = image[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (image[i] != lambda * b[i]) {
        throw NotScalar("rule does not act as a scalar on component k=" + std::to_string(k));
      }
    }
    params.lambda.push_back(lambda);
  }
  return params;
}

DistanceWeights named_weights(NamedRule rule, Shape shape)
{
  shape.validate();
  unsigned const n = shape.n;

  if ((rule == NamedRule::complement_pair || rule == NamedRule::parity_even) && shape.m != 2) {
    throw UnsupportedM(to_string(rule) + " weights are defined only for m=2 (got m=" +
                       std::to_string(shape.m) + ")");
  }

  DistanceWeights w{shape, std::vector<Rational>(n + 1)};
  for (unsigned d = 0; d <= n; ++d) {
    switch (rule) {
    case NamedRule::borda_like:
      w.a[d] = n - d;
      break;
    case NamedRule::approval_nondisjoint:
      w.a[d] = d < n ? 1 : 0;
      break;
    case NamedRule::complement_pair:
    case NamedRule::first_last:
      w.a[d] = (d == 0 || d == n) ? 1 : 0;
      break;
    case NamedRule::parity_even:
      w.a[d] = d % 2 == 0 ? 1 : 0;
      break;
    case NamedRule::alternating:
      w.a[d] = d % 2 == 0 ? 1 : -1;
      break;
    }
  }
  return w;
}

RuleAnalysis analyze_rule_on_profile(DistanceWeights const &w, RatVector const &p,
                                     Limits const &limits)
{
  auto const tally = tally_committee_ballots(w, p, limits);
  return {decompose_result(w.shape, p, limits), decompose_result(w.shape, tally.scores, limits),
          schur_parameters(w, limits)};
}

} // namespace strucvote
