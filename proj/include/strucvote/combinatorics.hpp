#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strucvote/rational.hpp"

/**
 * @file combinatorics.hpp
 * @brief Structured committees, the wreath product S_m wr S_n acting on
 * them, and the orbits of that action on strict rankings of committees.
 *
 * Candidates and departments are numbered from 1, matching the usual
 * (1_{j1},2_{j2},...) notation. Committee indices (positions in the
 * lexicographic order, department 1 most significant) start at 0.
 */

namespace strucvote
{

/// Size caps guarding the combinatorial explosions.
struct Limits
{
  std::size_t max_dimension = 4096;        ///< m^n
  std::uint64_t max_factorial = 1000000;   ///< (m^n)!, number of rankings
  std::uint64_t max_group_order = 1000000; ///< (m!)^n n!
};

/// m candidates in each of n departments.
struct Shape
{
  unsigned m = 0;
  unsigned n = 0;

  friend bool operator==(Shape, Shape) = default;

  /// m^n; throws SizeGuard above limits.max_dimension.
  std::size_t committee_count(Limits const &limits = {}) const;

  BigInt group_order() const;

  void validate() const;
};

class Committee
{
public:
  Committee() = default;
  explicit Committee(std::vector<unsigned> choices) : choices_(std::move(choices)) {}

  static Committee from_index(Shape shape, std::size_t index);

  std::size_t index(Shape shape) const;

  /// Candidate chosen in department `dept` (1-based).
  unsigned choice(unsigned dept) const { return choices_[dept - 1]; }
  std::vector<unsigned> const &choices() const { return choices_; }
  unsigned departments() const { return static_cast<unsigned>(choices_.size()); }

  void validate(Shape shape) const;

  /// "(1_2,2_1)"; subscripts with more than one digit get braces.
  std::string label() const;

  friend auto operator<=>(Committee const &, Committee const &) = default;

private:
  std::vector<unsigned> choices_;
};

/// A permutation of 1..degree in one-line notation.
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned x) const { return images_[x - 1]; }
  std::vector<unsigned> const &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// (*this * rhs)(x) = (*this)(rhs(x))
  Permutation operator*(Permutation const &rhs) const;

  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<unsigned> images_;
};

/// (sigma; pi): sigma_i permutes the candidates of department i, pi permutes
/// the departments.
struct WreathElement
{
  std::vector<Permutation> inner;
  Permutation outer;

  static WreathElement identity(Shape shape);

  bool is_identity() const;
  void validate(Shape shape) const;

  /// Group product; (g * h) . c == g . (h . c).
  WreathElement operator*(WreathElement const &rhs) const;
  WreathElement inverse() const;

  friend auto operator<=>(WreathElement const &, WreathElement const &) = default;
};

/// A strict ranking of all committees by index, most preferred first.
struct Ranking
{
  std::vector<std::uint32_t> order;

  void validate(Shape shape) const;

  friend auto operator<=>(Ranking const &, Ranking const &) = default;
};

using OrbitId = BigInt;

struct OrbitInfo
{
  Ranking representative;  ///< lexicographically smallest member
  std::size_t size = 0;
  OrbitId id;
  /// Sequential ids (sorted-representative order) versus ids derived from
  /// the representative's lexicographic rank.
  bool enumerated_id = false;
  /// Conventional label 1/2/3 of the m=n=2 orbits.
  std::optional<unsigned> alias;
};

std::vector<Committee> enumerate_committees(Shape shape, Limits const &limits = {});

/// Number of departments in which the two committees pick different
/// candidates.
unsigned disagreement(Committee const &a, Committee const &b);

Committee apply_wreath(WreathElement const &g, Committee const &c);

/// The permutation g induces on committee indices: result[i] = index of g.(committee i).
std::vector<std::uint32_t> committee_permutation(Shape shape, WreathElement const &g,
                                                 Limits const &limits = {});

/// Outer permutations in lexicographic one-line order; for each, the inner
/// tuples in odometer order (department n varies fastest).
std::vector<WreathElement> enumerate_group(Shape shape, Limits const &limits = {});

Ranking apply_wreath_to_ranking(Shape shape, WreathElement const &g, Ranking const &r,
                                Limits const &limits = {});

OrbitInfo orbit_of_ranking(Shape shape, Ranking const &r, Limits const &limits = {});

/// (m^n)! / ((m!)^n n!)
BigInt orbit_count(Shape shape, Limits const &limits = {});

std::vector<OrbitInfo> enumerate_orbits(Shape shape, Limits const &limits = {});

/// Position of r among all rankings of the same length in lexicographic order.
BigInt lexicographic_rank(Ranking const &r);

Ranking ranking_from_lexicographic_rank(std::size_t length, BigInt rank);

/**
 * Complete partition of all (m^n)! rankings into orbits, built once per
 * shape and shared. Immutable after construction, so one catalog may be used
 * from many threads.
 */
class OrbitCatalog
{
public:
  static std::shared_ptr<OrbitCatalog const> get(Shape shape, Limits const &limits = {});

  Shape shape() const { return shape_; }
  std::vector<OrbitInfo> const &orbits() const { return orbits_; }

  std::size_t orbit_index(Ranking const &r) const;

  /// Members of orbit `index` in lexicographic order.
  std::vector<Ranking> members(std::size_t index) const;

  std::size_t ranking_count() const { return orbit_of_rank_.size(); }

  explicit OrbitCatalog(Shape shape, Limits const &limits);

private:
  Shape shape_;
  std::vector<OrbitInfo> orbits_;
  std::vector<std::uint32_t> orbit_of_rank_;
  std::vector<std::vector<std::uint32_t>> member_ranks_;
};

/// Index of the orbit with canonical id `id`; throws InvalidInput when out
/// of range.
std::size_t resolve_orbit_index(OrbitCatalog const &catalog, OrbitId const &id);

/// Canonical id of the m=n=2 orbit carrying label 1, 2 or 3.
OrbitId orbit_id_for_alias(Shape shape, unsigned alias, Limits const &limits = {});

/// True when all rankings of `shape` fit under limits.max_factorial.
bool orbits_enumerable(Shape shape, Limits const &limits = {});

} // namespace strucvote
