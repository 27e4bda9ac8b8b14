#ifndef LIEALG_ERRORS_HPP
#define LIEALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liealg {

/// A subspace that must be an ideal is not.
class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subspace that must be a subalgebra is not closed under the bracket.
class NotClosed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The same basis bracket was defined twice (in either orientation).
class DuplicateBracket : public std::invalid_argument {
 public:
  DuplicateBracket(std::size_t i, std::size_t j)
      : std::invalid_argument("bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] defined more than once"),
        i_(i),
        j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// Structure constants violate antisymmetry or the Jacobi identity.
class InvalidAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra file; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace liealg

#endif  // LIEALG_ERRORS_HPP
