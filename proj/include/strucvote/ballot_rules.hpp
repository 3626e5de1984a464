#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strucvote/decomposition.hpp"

/**
 * @file ballot_rules.hpp
 * @brief Neutral points-based rules on single-committee ballots.
 *
 * A ballot for C gives a[d] points to every committee disagreeing with C in
 * d departments. Such a rule commutes with the wreath product, so it acts on
 * each irreducible component k by one scalar lambda[k] (its Schur
 * parameters).
 */

namespace strucvote
{

struct DistanceWeights
{
  Shape shape;
  std::vector<Rational> a;  ///< a[d], d = 0..n

  void validate() const;
};

struct SchurParameters
{
  std::vector<Rational> lambda;  ///< lambda[k], k = 0..n
};

struct BallotTally
{
  RatVector scores;
  std::vector<Committee> winners;  ///< every maximiser, in index order
};

enum class NamedRule
{
  borda_like,
  approval_nondisjoint,
  complement_pair,
  parity_even,
  alternating,
  first_last,
};

std::optional<NamedRule> parse_named_rule(std::string_view name);
std::string to_string(NamedRule rule);

/// Entry [c, c'] = a[disagreement(c', c)]; symmetric.
RatMatrix scoring_matrix(DistanceWeights const &w, Limits const &limits = {});

/// Argmax set of a score vector.
BallotTally make_tally(Shape shape, RatVector scores);

/// p[c'] is the number of ballots naming committee c'.
BallotTally tally_committee_ballots(DistanceWeights const &w, RatVector const &p,
                                    Limits const &limits = {});

SchurParameters schur_parameters(DistanceWeights const &w, Limits const &limits = {});

DistanceWeights named_weights(NamedRule rule, Shape shape);

struct RuleAnalysis
{
  DecompositionReport profile;
  DecompositionReport scores;
  SchurParameters parameters;
};

RuleAnalysis analyze_rule_on_profile(DistanceWeights const &w, RatVector const &p,
                                     Limits const &limits = {});

} // namespace strucvote
