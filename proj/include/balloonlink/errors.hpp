#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace balloonlink {

/// Raised when an argument lies outside the domain of a physical formula.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario text. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(what), line_(line)
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// One or more scenario fields violate their constraints. Every violation is
/// collected, so the message lists all of them.
class ValidationError : public std::runtime_error
{
public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
  std::vector<std::string> violations_;
};

/// Bad command-line usage (unknown figure id, malformed flag value).
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace balloonlink
