#pragma once

#include <span>
#include <vector>

#include "strucvote/combinatorics.hpp"
#include "strucvote/linalg.hpp"

/**
 * @file decomposition.hpp
 * @brief The n+1 irreducible components of the committee space.
 *
 * Component k (0 <= k <= n) is S^((n-k),(k)) of dimension C(n,k)(m-1)^k:
 * k=0 is the constant vectors, k=1 the Borda subspace, k=n the sign
 * subspace. Each component is spanned by the vectors b_C, one per target
 * committee C, whose entry at C' depends only on the number d of departments
 * where C and C' disagree.
 */

namespace strucvote
{

/// Values [p_0; p_1; ...; p_n] of a vector indexed by disagreement count d.
struct DistanceProfile
{
  Shape shape;
  unsigned k = 0;
  std::vector<Rational> values;
};

struct ComponentVector
{
  unsigned k = 0;
  Committee target;
  RatVector vector;
};

struct DecompositionReport
{
  RatVector input;
  std::vector<RatVector> components;  ///< indexed by k
  std::vector<Rational> norms_squared;
};

/// values[d] = sum_l C(n-d, l) C(d, k-l) (m-1)^l (-1)^(k-l)
DistanceProfile distance_profile(Shape shape, unsigned k);

/// The vector whose entry at C' is values[disagreement(target, C')].
RatVector expand_distance_values(Shape shape, std::span<Rational const> values,
                                 Committee const &target, Limits const &limits = {});

ComponentVector component_vector(Shape shape, unsigned k, Committee const &target,
                                 Limits const &limits = {});

/// b_C for every committee C, in lexicographic order of C (redundant).
std::vector<ComponentVector> component_spanning_set(Shape shape, unsigned k,
                                                    Limits const &limits = {});

/// C(n,k) (m-1)^k
BigInt component_dimension(Shape shape, unsigned k);

DecompositionReport decompose_result(Shape shape, RatVector const &v, Limits const &limits = {});

/// The n(m-1) vectors v_{d,i}: +1 where department d picks candidate 1, -1
/// where it picks candidate i (2 <= i <= m). Ordered by d, then i.
std::vector<RatVector> borda_department_basis(Shape shape, Limits const &limits = {});

} // namespace strucvote
