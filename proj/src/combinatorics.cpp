#include "strucvote/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

// Rankings of W=(1_1,2_1), X=(1_1,2_2), Y=(1_2,2_1), Z=(1_2,2_2) that name
// the three m=n=2 orbits: disjoint committees first/last, first/third,
// first/second.
std::array<Ranking, 3> const alias_rankings = {
  Ranking{{0, 2, 1, 3}},
  Ranking{{0, 1, 3, 2}},
  Ranking{{0, 3, 1, 2}},
};

bool is_two_by_two(Shape shape)
{
  return shape.m == 2 && shape.n == 2;
}

std::string shape_text(Shape shape)
{
  return "m=" + std::to_string(shape.m) + ", n=" + std::to_string(shape.n);
}

std::uint64_t lehmer_rank_u64(std::vector<std::uint32_t> const &order)
{
  std::size_t const len = order.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (order[j] < order[i])
        ++smaller;
    }
    rank = rank * (len - i) + smaller;
  }
  return rank;
}

std::vector<Permutation> all_permutations(unsigned degree)
{
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 1u);

  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

} // anonymous namespace

std::size_t Shape::committee_count(Limits const &limits) const
{
  validate();

  BigInt const count = power(m, n);
  if (count > BigInt(static_cast<unsigned long>(limits.max_dimension))) {
    throw SizeGuard(shape_text(*this) + " gives " + count.get_str() +
                    " committees, above the dimension cap of " +
                    std::to_string(limits.max_dimension));
  }
  return count.get_ui();
}

BigInt Shape::group_order() const
{
  return power(factorial(m), n) * factorial(n);
}

void Shape::validate() const
{
  if (m < 1 || n < 1)
    throw InvalidInput("m and n must be at least 1 (got " + shape_text(*this) + ")");
}

Committee Committee::from_index(Shape shape, std::size_t index)
{
  std::vector<unsigned> choices(shape.n);
  for (unsigned i = shape.n; i-- > 0;) {
    choices[i] = static_cast<unsigned>(index % shape.m) + 1;
    index /= shape.m;
  }
  if (index != 0)
    throw InvalidInput("committee index out of range for " + shape_text(shape));
  return Committee(std::move(choices));
}

std::size_t Committee::index(Shape shape) const
{
  std::size_t result = 0;
  for (unsigned choice : choices_)
    result = result * shape.m + (choice - 1);
  return result;
}

void Committee::validate(Shape shape) const
{
  if (choices_.size() != shape.n) {
    throw DimensionMismatch("committee has " + std::to_string(choices_.size()) +
                            " departments, expected " + std::to_string(shape.n));
  }
  for (unsigned choice : choices_) {
    if (choice < 1 || choice > shape.m)
      throw InvalidInput("candidate " + std::to_string(choice) + " outside 1.." +
                         std::to_string(shape.m));
  }
}

std::string Committee::label() const
{
  std::string text = "(";
  for (std::size_t i = 0; i < choices_.size(); ++i) {
    if (i > 0)
      text += ',';
    std::string const sub = std::to_string(choices_[i]);
    text += std::to_string(i + 1) + "_";
    text += sub.size() == 1 ? sub : "{" + sub + "}";
  }
  return text + ")";
}

Permutation::Permutation(std::vector<unsigned> images)
  : images_(std::move(images))
{
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned x : images_) {
    if (x < 1 || x > images_.size() || seen[x])
      throw InvalidInput("not a permutation in one-line notation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(unsigned degree)
{
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<unsigned> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw DimensionMismatch("composing permutations of different degree");

  std::vector<unsigned> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = images_[rhs.images_[i] - 1];
  return Permutation(std::move(images));
}

WreathElement WreathElement::identity(Shape shape)
{
  return {std::vector<Permutation>(shape.n, Permutation::identity(shape.m)),
          Permutation::identity(shape.n)};
}

bool WreathElement::is_identity() const
{
  return outer.is_identity() &&
         std::all_of(inner.begin(), inner.end(), [](auto const &p) { return p.is_identity(); });
}

void WreathElement::validate(Shape shape) const
{
  if (inner.size() != shape.n || outer.degree() != shape.n)
    throw DimensionMismatch("wreath element does not match n=" + std::to_string(shape.n));
  for (auto const &sigma : inner) {
    if (sigma.degree() != shape.m)
      throw DimensionMismatch("wreath element does not match m=" + std::to_string(shape.m));
  }
}

// g.(h.c) sends department i to sigma_i(sigma'_{pi^-1(i)}(c[pi'^-1(pi^-1(i))])).
WreathElement WreathElement::operator*(WreathElement const &rhs) const
{
  Permutation const outer_inv = outer.inverse();

  WreathElement product;
  product.outer = outer * rhs.outer;
  product.inner.reserve(inner.size());
  for (unsigned i = 1; i <= inner.size(); ++i)
    product.inner.push_back(inner[i - 1] * rhs.inner[outer_inv(i) - 1]);
  return product;
}

WreathElement WreathElement::inverse() const
{
  // (sigma; pi)^-1 = (tau; pi^-1) with tau_i = sigma_{pi(i)}^-1.
  WreathElement inv;
  inv.outer = outer.inverse();
  inv.inner.reserve(inner.size());
  for (unsigned i = 1; i <= inner.size(); ++i)
    inv.inner.push_back(inner[outer(i) - 1].inverse());
  return inv;
}

void Ranking::validate(Shape shape) const
{
  shape.validate();
  if (power(shape.m, shape.n) != static_cast<unsigned long>(order.size())) {
    throw DimensionMismatch("ranking has " + std::to_string(order.size()) +
                            " entries, expected " + power(shape.m, shape.n).get_str());
  }
  std::size_t const count = order.size();
  std::vector<bool> seen(count, false);
  for (auto c : order) {
    if (c >= count || seen[c])
      throw InvalidInput("ranking is not a permutation of the committee indices");
    seen[c] = true;
  }
}

std::vector<Committee> enumerate_committees(Shape shape, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);

  std::vector<Committee> result;
  result.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    result.push_back(Committee::from_index(shape, i));
  return result;
}

unsigned disagreement(Committee const &a, Committee const &b)
{
  if (a.departments() != b.departments())
    throw DimensionMismatch("committees have different numbers of departments");

  unsigned d = 0;
  for (unsigned i = 1; i <= a.departments(); ++i) {
    if (a.choice(i) != b.choice(i))
      ++d;
  }
  return d;
}

Committee apply_wreath(WreathElement const &g, Committee const &c)
{
  unsigned const n = c.departments();
  if (g.inner.size() != n || g.outer.degree() != n)
    throw DimensionMismatch("wreath element and committee disagree on n");

  Permutation const outer_inv = g.outer.inverse();
  std::vector<unsigned> choices(n);
  for (unsigned i = 1; i <= n; ++i) {
    Permutation const &sigma = g.inner[i - 1];
    unsigned const source = c.choice(outer_inv(i));
    if (source > sigma.degree())
      throw DimensionMismatch("wreath element and committee disagree on m");
    choices[i - 1] = sigma(source);
  }
  return Committee(std::move(choices));
}

std::vector<std::uint32_t> committee_permutation(Shape shape, WreathElement const &g,
                                                 Limits const &limits)
{
  g.validate(shape);
  std::size_t const count = shape.committee_count(limits);

  std::vector<std::uint32_t> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto const image = apply_wreath(g, Committee::from_index(shape, i));
    images[i] = static_cast<std::uint32_t>(image.index(shape));
  }
  return images;
}

std::vector<WreathElement> enumerate_group(Shape shape, Limits const &limits)
{
  shape.validate();

  BigInt const order = shape.group_order();
  if (order > BigInt(static_cast<unsigned long>(limits.max_group_order))) {
    throw SizeGuard("S_" + std::to_string(shape.m) + " wr S_" + std::to_string(shape.n) +
                    " has order " + order.get_str() + ", above the group cap of " +
                    std::to_string(limits.max_group_order));
  }

  auto const inner_perms = all_permutations(shape.m);
  auto const outer_perms = all_permutations(shape.n);

  std::size_t const tuples = power(static_cast<unsigned long>(inner_perms.size()), shape.n).get_ui();

  std::vector<WreathElement> group;
  group.reserve(order.get_ui());
  for (auto const &pi : outer_perms) {
    for (std::size_t t = 0; t < tuples; ++t) {
      WreathElement g;
      g.outer = pi;
      g.inner.resize(shape.n);
      std::size_t rest = t;
      for (unsigned i = shape.n; i-- > 0;) {
        g.inner[i] = inner_perms[rest % inner_perms.size()];
        rest /= inner_perms.size();
      }
      group.push_back(std::move(g));
    }
  }
  return group;
}

Ranking apply_wreath_to_ranking(Shape shape, WreathElement const &g, Ranking const &r,
                                Limits const &limits)
{
  r.validate(shape);
  auto const images = committee_permutation(shape, g, limits);

  Ranking result;
  result.order.reserve(r.order.size());
  for (auto c : r.order)
    result.order.push_back(images[c]);
  return result;
}

bool orbits_enumerable(Shape shape, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  return factorial(count) <= BigInt(static_cast<unsigned long>(limits.max_factorial));
}

OrbitInfo orbit_of_ranking(Shape shape, Ranking const &r, Limits const &limits)
{
  r.validate(shape);
  auto const group = enumerate_group(shape, limits);

  std::set<Ranking> images;
  for (auto const &g : group) {
    auto const perm = committee_permutation(shape, g, limits);
    Ranking image;
    image.order.reserve(r.order.size());
    for (auto c : r.order)
      image.order.push_back(perm[c]);
    images.insert(std::move(image));
  }

  OrbitInfo info;
  info.representative = *images.begin();
  info.size = images.size();

  if (orbits_enumerable(shape, limits)) {
    auto const catalog = OrbitCatalog::get(shape, limits);
    info.id = catalog->orbit_index(info.representative);
    info.enumerated_id = true;
  } else {
    info.id = lexicographic_rank(info.representative);
  }

  if (is_two_by_two(shape)) {
    for (unsigned label = 1; label <= alias_rankings.size(); ++label) {
      if (images.contains(alias_rankings[label - 1]))
        info.alias = label;
    }
  }
  return info;
}

BigInt orbit_count(Shape shape, Limits const &limits)
{
  std::size_t const count = shape.committee_count(limits);
  // With m=1 the department permutations fix the only committee, so the
  // action is not free and the closed form does not apply.
  if (shape.m == 1)
    return 1;
  return factorial(count) / shape.group_order();
}

std::vector<OrbitInfo> enumerate_orbits(Shape shape, Limits const &limits)
{
  return OrbitCatalog::get(shape, limits)->orbits();
}

BigInt lexicographic_rank(Ranking const &r)
{
  std::size_t const len = r.order.size();
  BigInt rank = 0;
  for (std::size_t i = 0; i < len; ++i) {
    unsigned long smaller = 0;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (r.order[j] < r.order[i])
        ++smaller;
    }
    rank = rank * static_cast<unsigned long>(len - i) + smaller;
  }
  return rank;
}

Ranking ranking_from_lexicographic_rank(std::size_t length, BigInt rank)
{
  if (rank < 0 || rank >= factorial(length))
    throw InvalidInput("ranking rank out of range");

  std::vector<std::uint32_t> remaining(length);
  std::iota(remaining.begin(), remaining.end(), 0u);

  Ranking r;
  r.order.reserve(length);
  for (std::size_t i = length; i > 0; --i) {
    BigInt const block = factorial(i - 1);
    BigInt const digit = rank / block;
    rank -= digit * block;
    std::size_t const d = digit.get_ui();
    r.order.push_back(remaining[d]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return r;
}

OrbitCatalog::OrbitCatalog(Shape shape, Limits const &limits)
  : shape_(shape)
{
  if (!orbits_enumerable(shape, limits)) {
    throw SizeGuard("(m^n)! rankings for " + shape_text(shape) +
                    " exceed the factorial cap of " + std::to_string(limits.max_factorial));
  }

  std::size_t const count = shape.committee_count(limits);
  std::size_t const total = factorial(count).get_ui();

  std::vector<std::vector<std::uint32_t>> perms;
  for (auto const &g : enumerate_group(shape, limits))
    perms.push_back(committee_permutation(shape, g, limits));

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  orbit_of_rank_.assign(total, unassigned);

  // Rankings are visited in lexicographic order, so the first unassigned
  // ranking is the smallest member of a new orbit and ids come out in
  // sorted-representative order.
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::uint32_t> image(count);
  std::uint64_t rank = 0;
  do {
    if (orbit_of_rank_[rank] == unassigned) {
      auto const id = static_cast<std::uint32_t>(orbits_.size());
      std::vector<std::uint32_t> members;
      for (auto const &perm : perms) {
        for (std::size_t pos = 0; pos < count; ++pos)
          image[pos] = perm[order[pos]];
        auto const image_rank = lehmer_rank_u64(image);
        if (orbit_of_rank_[image_rank] == unassigned) {
          orbit_of_rank_[image_rank] = id;
          members.push_back(static_cast<std::uint32_t>(image_rank));
        }
      }
      std::sort(members.begin(), members.end());

      OrbitInfo info;
      info.representative = Ranking{order};
      info.size = members.size();
      info.id = id;
      info.enumerated_id = true;
      orbits_.push_back(std::move(info));
      member_ranks_.push_back(std::move(members));
    }
    ++rank;
  } while (std::next_permutation(order.begin(), order.end()));

  if (is_two_by_two(shape)) {
    for (unsigned label = 1; label <= alias_rankings.size(); ++label)
      orbits_[orbit_index(alias_rankings[label - 1])].alias = label;
  }
}

std::shared_ptr<OrbitCatalog const> OrbitCatalog::get(Shape shape, Limits const &limits)
{
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<OrbitCatalog const>> cache;

  if (!orbits_enumerable(shape, limits)) {
    throw SizeGuard("(m^n)! rankings for " + shape_text(shape) +
                    " exceed the factorial cap of " + std::to_string(limits.max_factorial));
  }

  std::lock_guard lock(mutex);
  auto &slot = cache[{shape.m, shape.n}];
  if (!slot)
    slot = std::make_shared<OrbitCatalog const>(shape, limits);
  return slot;
}

std::size_t OrbitCatalog::orbit_index(Ranking const &r) const
{
  r.validate(shape_);
  return orbit_of_rank_[lehmer_rank_u64(r.order)];
}

std::vector<Ranking> OrbitCatalog::members(std::size_t index) const
{
  std::size_t const count = orbits_.front().representative.order.size();

  std::vector<Ranking> result;
  result.reserve(member_ranks_.at(index).size());
  for (auto rank : member_ranks_[index])
    result.push_back(ranking_from_lexicographic_rank(count, rank));
  return result;
}

std::size_t resolve_orbit_index(OrbitCatalog const &catalog, OrbitId const &id)
{
  if (id < 0 || id >= catalog.orbits().size())
    throw InvalidInput("orbit id " + id.get_str() + " out of range");
  return id.get_ui();
}

OrbitId orbit_id_for_alias(Shape shape, unsigned alias, Limits const &limits)
{
  if (!is_two_by_two(shape) || alias < 1 || alias > alias_rankings.size())
    throw InvalidInput("orbit aliases O1..O3 exist only for m=n=2");
  return OrbitCatalog::get(shape, limits)->orbit_index(alias_rankings[alias - 1]);
}

} // namespace strucvote
