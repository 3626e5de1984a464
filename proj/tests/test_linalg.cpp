#include <doctest.h>

#include "strucvote/errors.hpp"
#include "support/oracles.hpp"

using namespace strucvote;
using oracle::vec;

TEST_CASE("rationals stay in lowest terms with a positive denominator")
{
  Rational const q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
}

TEST_CASE("rational parsing")
{
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-15/6") == Rational(-5, 2));
  CHECK(Rational::parse("-2.5") == Rational(-5, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
}

TEST_CASE("big integer helpers")
{
  CHECK(factorial(0) == 1);
  CHECK(factorial(20).get_str() == "2432902008176640000");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(power(BigInt(3), 40).get_str() == "12157665459056928801");
}

TEST_CASE("rank")
{
  CHECK(rank(RatMatrix::identity(2)) == 2);
  CHECK(rank(RatMatrix(3, 3)) == 0);
}

TEST_CASE("rank of the Borda blocks of the m=n=2 scoring matrix")
{
  RatVector const borda = vec({3, 2, 1, 0});
  RatMatrix const orbit1 = oracle::literal_block(0, borda);
  // a+d = b+c makes every column orthogonal to [1,-1,-1,1].
  CHECK(oracle::minor_rank(orbit1) == 3);
  CHECK(rank(orbit1) == 3);
  for (unsigned orbit : {1u, 2u}) {
    RatMatrix const block = oracle::literal_block(orbit, borda);
    CHECK(oracle::minor_rank(block) == 4);
    CHECK(rank(block) == 4);
  }
}

TEST_CASE("nullspace")
{
  CHECK(nullspace(RatMatrix::identity(3)).empty());

  auto const ones = nullspace(RatMatrix::from_rows(std::vector{vec({1, 1})}));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0][0] == -ones[0][1]);
  CHECK_FALSE(ones[0].is_zero());

  std::vector<RatVector> const rows = {vec({1, 1, 1, 1}), vec({1, -1, -1, 1})};
  auto const basis = nullspace(RatMatrix::from_rows(rows));
  CHECK(basis.size() == 2);
  CHECK(in_span(basis, vec({1, 0, 0, -1})));
  CHECK(in_span(basis, vec({0, 1, -1, 0})));
}

TEST_CASE("solve")
{
  CHECK(solve(RatMatrix::identity(2), vec({Rational(5, 2), -1})) == vec({Rational(5, 2), -1}));

  auto const x = solve(RatMatrix::from_rows(std::vector{vec({1, 1})}), vec({0}));
  CHECK(x[0] == -x[1]);

  RatMatrix const singular = RatMatrix::from_rows(std::vector{vec({1, 0}), vec({0, 0})});
  CHECK_THROWS_AS(solve(singular, vec({0, 1})), InconsistentSystem);
  CHECK_FALSE(try_solve(singular, vec({0, 1})).has_value());
  CHECK_THROWS_AS(solve(singular, vec({1})), DimensionMismatch);
}

TEST_CASE("projection onto a span")
{
  RatVector const v = vec({9, 5, 6, 10});
  CHECK(project_onto_span(std::vector{vec({1, 1, 1, 1})}, v) ==
        vec({Rational(15, 2), Rational(15, 2), Rational(15, 2), Rational(15, 2)}));
  std::vector<RatVector> const borda = {vec({1, 1, -1, -1}), vec({1, -1, 1, -1})};
  CHECK(project_onto_span(borda, v) ==
        vec({Rational(-1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)}));

  // Redundant spanning sets are allowed.
  std::vector<RatVector> const redundant = {vec({1, 1, -1, -1}), vec({1, -1, 1, -1}),
                                            vec({2, 0, 0, -2}), vec({0, 0, 0, 0})};
  CHECK(project_onto_span(redundant, v) == project_onto_span(borda, v));
  CHECK(project_onto_span(std::vector<RatVector>{}, v) == RatVector(4));
}

TEST_CASE("linear algebra properties on random matrices")
{
  oracle::Random rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const rows = static_cast<std::size_t>(rng.integer(1, 5));
    std::size_t const cols = static_cast<std::size_t>(rng.integer(1, 6));
    std::vector<RatVector> data;
    for (std::size_t r = 0; r < rows; ++r) {
      // Occasional duplicated rows and zero entries keep ranks deficient.
      if (r > 0 && rng.integer(0, 3) == 0) {
        data.push_back(rng.rational() * data[0]);
        continue;
      }
      RatVector row = rng.vector(cols);
      for (auto &x : row)
        if (rng.integer(0, 2) == 0)
          x = 0;
      data.push_back(row);
    }
    RatMatrix const m = RatMatrix::from_rows(data);

    auto const kernel = nullspace(m);
    CHECK(rank(m) + kernel.size() == cols);
    for (auto const &v : kernel)
      CHECK((m * v).is_zero());
    if (rows <= 4 && cols <= 4)
      CHECK(rank(m) == oracle::minor_rank(m));

    RatVector const b = m * rng.vector(cols);
    auto const x = try_solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);

    std::vector<RatVector> const basis = row_space_basis(m);
    RatVector const v = rng.vector(cols);
    RatVector const p = project_onto_span(data, v);
    CHECK(project_onto_span(data, p) == p);
    for (auto const &row : data)
      CHECK(dot(v - p, row).is_zero());
    CHECK(in_span(basis, p));
  }
}
