#pragma once

#include <stdexcept>
#include <string>

namespace pcombine {

// Parameter outside its mathematical domain (bad rho, alpha, p-value, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// API misuse: mismatched kinds, inconsistent dimensions, unsupported combos.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not reach its target accuracy.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double achieved_error = -1.0)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Malformed input file or config; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, long long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")"
                                     : what),
        line_(line) {}
  long long line() const noexcept { return line_; }

 private:
  long long line_;
};

}  // namespace pcombine
