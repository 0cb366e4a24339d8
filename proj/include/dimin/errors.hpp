#pragma once

#include <stdexcept>
#include <string>

namespace dimin
{

/// Precondition violated by the caller (width mismatch, zero argument, ...).
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed cube text or PLA input.
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& msg, std::size_t line = 0 )
      : std::runtime_error( line ? "line " + std::to_string( line ) + ": " + msg : msg ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An ON minterm lies inside an OFF cube.
class inconsistent_function : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The OFF-set is empty; the only prime is the universal cube.
class empty_offset : public std::runtime_error
{
public:
  empty_offset() : std::runtime_error( "empty OFF-set" ) {}
};

class empty_onset : public std::runtime_error
{
public:
  empty_onset() : std::runtime_error( "empty ON-set" ) {}
};

/// Input too large for an exhaustive routine (oracle, complementation, expansion).
class size_guard_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace dimin
