#pragma once

#include <stdexcept>
#include <string>

namespace smw {

/// Precondition on an operation's input does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed graph or decomposition document.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exhaustive routine was asked to run beyond its size limit.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was observed to be false.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace smw
