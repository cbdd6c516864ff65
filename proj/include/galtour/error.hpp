#ifndef GALTOUR_ERROR_HPP
#define GALTOUR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galtour {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound (closure, subgroup enumeration, isomorphism) was exceeded.
class SizeError : public Error
{
public:
  using Error::Error;
};

/// Caller violated an operation's precondition: fields not nested, a
/// marche that is not Galois, a malformed tower, and so on.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t line = 0)
  : Error(line ? "line " + std::to_string(line) + ": " + what : what),
    _line(line)
  {}

  std::size_t line() const noexcept { return _line; }

private:
  std::size_t _line;
};

/// An internal consistency check failed. Always a bug, never user error.
class TheoremViolation : public Error
{
public:
  using Error::Error;
};

} // namespace galtour

#endif // GALTOUR_ERROR_HPP
