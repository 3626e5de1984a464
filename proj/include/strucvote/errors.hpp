#pragma once

#include <stdexcept>
#include <string>

namespace strucvote
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad rational text, invalid committee, ...).
class InvalidInput : public Error
{
public:
  using Error::Error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

/// A weight vector passed to an m=n=2 helper does not have length 4.
class WrongSize : public Error
{
public:
  using Error::Error;
};

/// A computation would exceed one of the configured size caps.
class SizeGuard : public Error
{
public:
  using Error::Error;
};

/// Component index outside 0..n.
class BadK : public Error
{
public:
  using Error::Error;
};

class InconsistentSystem : public Error
{
public:
  using Error::Error;
};

/// A neutral rule failed to act as a scalar on an irreducible component.
/// Never expected in practice; indicates an internal bug.
class NotScalar : public Error
{
public:
  using Error::Error;
};

class UnsupportedM : public Error
{
public:
  using Error::Error;
};

/// A paradox instance violates the hypotheses needed for a solution.
class Infeasible : public Error
{
public:
  using Error::Error;
};

} // namespace strucvote
