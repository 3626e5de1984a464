#include "strucvote/rational.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);

  if (!all_digits(digits))
    throw InvalidInput("not a rational number: '" + std::string(whole) + "'");

  BigInt value(std::string(digits), 10);
  if (!s.empty() && s.front() == '-')
    value = -value;
  return value;
}

} // anonymous namespace

Rational::Rational(BigInt const &value)
  : value_(value)
{}

Rational::Rational(BigInt const &numerator, BigInt const &denominator)
{
  if (denominator == 0)
    throw InvalidInput("rational with zero denominator");

  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value)
  : value_(std::move(value))
{
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    return Rational(num, BigInt(std::string(den_text), 10));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part))
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");

    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view int_digits = int_part;
    if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+'))
      int_digits.remove_prefix(1);
    if (int_digits.empty() && frac_part.empty())
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    if (!int_digits.empty() && !all_digits(int_digits))
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");

    std::string digits = std::string(int_digits) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    if (negative)
      num = -num;
    return Rational(num, power(10, frac_part.size()));
  }

  return Rational(parse_integer(text, text));
}

std::string Rational::str() const
{
  if (value_.get_den() == 1)
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(Rational const &rhs)
{
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational &Rational::operator-=(Rational const &rhs)
{
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational &Rational::operator*=(Rational const &rhs)
{
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational &Rational::operator/=(Rational const &rhs)
{
  if (rhs.is_zero())
    throw InvalidInput("division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

void Rational::add_product(Rational const &a, Rational const &b)
{
  if (a.is_zero() || b.is_zero())
    return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_product(Rational const &a, Rational const &b)
{
  if (a.is_zero() || b.is_zero())
    return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

Rational Rational::operator-() const
{
  Rational result;
  mpq_neg(result.value_.get_mpq_t(), value_.get_mpq_t());
  return result;
}

std::ostream &operator<<(std::ostream &os, Rational const &q)
{
  return os << q.str();
}

BigInt factorial(unsigned long n)
{
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned long n, unsigned long k)
{
  if (k > n)
    return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt power(BigInt const &base, unsigned long exponent)
{
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

} // namespace strucvote
