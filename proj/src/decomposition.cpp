#include "strucvote/decomposition.hpp"

#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

void check_k(Shape shape, unsigned k)
{
  if (k > shape.n) {
    throw BadK("component index k=" + std::to_string(k) + " outside 0.." +
               std::to_string(shape.n));
  }
}

} // anonymous namespace

DistanceProfile distance_profile(Shape shape, unsigned k)
{
  shape.validate();
  check_k(shape, k);

  DistanceProfile profile{shape, k, {}};
  profile.values.reserve(shape.n + 1);

  BigInt const m_minus_one = shape.m - 1;
  for (unsigned d = 0; d <= shape.n; ++d) {
    // l of the k chosen departments agree with the target, k-l disagree.
    BigInt value = 0;
    for (unsigned l = 0; l <= k; ++l) {
      BigInt term = binomial(shape.n - d, l) * binomial(d, k - l) * power(m_minus_one, l);
      if ((k - l) % 2 == 1)
        term = -term;
      value += term;
    }
    profile.values.emplace_back(value);
  }
  return profile;
}

RatVector expand_distance_values(Shape shape, std::span<Rational const> values,
                                 Committee const &target, Limits const &limits)
{
  target.validate(shape);
  if (values.size() != shape.n + 1) {
    throw DimensionMismatch("expected " + std::to_string(shape.n + 1) +
                            " distance values, got " + std::to_string(values.size()));
  }

  std::size_t const count = shape.committee_count(limits);
  RatVector v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = values[disagreement(target, Committee::from_index(shape, i))];
  return v;
}

ComponentVector component_vector(Shape shape, unsigned k, Committee const &target,
                                 Limits const &limits)
{
  auto const profile = distance_profile(shape, k);
  return {k, target, expand_distance_values(shape, profile.values, target, limits)};
}

std::vector<ComponentVector> component_spanning_set(Shape shape, unsigned k,
                                                    Limits const &limits)
{
  auto const profile = distance_profile(shape, k);
  auto const committees = enumerate_committees(shape, limits);

  std::vector<ComponentVector> set;
  set.reserve(committees.size());
  for (auto const &target : committees)
    set.push_back({k, target, expand_distance_values(shape, profile.values, target, limits)});
  return set;
}

BigInt component_dimension(Shape shape, unsigned k)
{
  check_k(shape, k);
  return binomial(shape.n, k) * power(shape.m - 1, k);
}

DecompositionReport decompose_result(Shape shape, RatVector const &v, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  if (v.size() != count) {
    throw DimensionMismatch("vector has dimension " + std::to_string(v.size()) +
                            ", expected m^n = " + std::to_string(count));
  }

  DecompositionReport report;
  report.input = v;
  for (unsigned k = 0; k <= shape.n; ++k) {
    std::vector<RatVector> spanning;
    for (auto &b : component_spanning_set(shape, k, limits))
      spanning.push_back(std::move(b.vector));

    RatVector component = project_onto_span(spanning, v);
    report.norms_squared.push_back(dot(component, component));
    report.components.push_back(std::move(component));
  }
  return report;
}

std::vector<RatVector> borda_department_basis(Shape shape, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  auto const committees = enumerate_committees(shape, limits);

  std::vector<RatVector> basis;
  for (unsigned dept = 1; dept <= shape.n; ++dept) {
    for (unsigned i = 2; i <= shape.m; ++i) {
      RatVector v(count);
      for (std::size_t c = 0; c < count; ++c) {
        unsigned const choice = committees[c].choice(dept);
        if (choice == 1)
          v[c] = 1;
        else if (choice == i)
          v[c] = -1;
      }
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

} // namespace strucvote
