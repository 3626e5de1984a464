#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 */

namespace strucvote
{

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational
{
public:
  Rational() = default;

  template<std::integral T>
  Rational(T value) // NOLINT(google-explicit-constructor)
  {
    if constexpr (std::is_signed_v<T>)
      value_ = static_cast<long>(value);
    else
      value_ = static_cast<unsigned long>(value);
  }

  Rational(BigInt const &value); // NOLINT(google-explicit-constructor)
  Rational(BigInt const &numerator, BigInt const &denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "p/q" or a finite decimal such as "-2.5".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" when the denominator is one, "p/q" otherwise.
  std::string str() const;

  mpq_class const &raw() const { return value_; }

  Rational &operator+=(Rational const &rhs);
  Rational &operator-=(Rational const &rhs);
  Rational &operator*=(Rational const &rhs);
  Rational &operator/=(Rational const &rhs);

  /// this += a * b without a temporary Rational.
  void add_product(Rational const &a, Rational const &b);
  void sub_product(Rational const &a, Rational const &b);

  Rational operator-() const;

  friend Rational operator+(Rational lhs, Rational const &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, Rational const &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, Rational const &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, Rational const &rhs) { return lhs /= rhs; }

  friend bool operator==(Rational const &lhs, Rational const &rhs)
  { return lhs.value_ == rhs.value_; }

  friend std::strong_ordering operator<=>(Rational const &lhs, Rational const &rhs)
  {
    int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

private:
  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, Rational const &q);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt power(BigInt const &base, unsigned long exponent);

} // namespace strucvote
