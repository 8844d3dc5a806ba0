#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhl {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector dimensions. The message names both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input fails a structural invariant (non-Hermitian, non-idempotent, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Degenerate input such as the zero vector.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A formula atom has no binding.
class UnboundAtomError : public Error {
 public:
  explicit UnboundAtomError(const std::string& atom)
      : Error("unbound atom: " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// Rejected formula text. Position is a 0-based byte offset into the input;
/// end-of-input errors sit at offset == input length.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("parse error at offset " + std::to_string(position) +
              ": expected " + expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

/// One non-commuting pair, by generator index.
struct CommutatorClash {
  std::size_t left;
  std::size_t right;
  double norm;
};

/// Framework construction rejected: lists every offending generator pair.
class NonCommutingError : public Error {
 public:
  NonCommutingError(std::string message, std::vector<CommutatorClash> clashes)
      : Error(std::move(message)), clashes_(std::move(clashes)) {}
  const std::vector<CommutatorClash>& clashes() const { return clashes_; }

 private:
  std::vector<CommutatorClash> clashes_;
};

/// Probabilities requested for a family that fails the consistency condition.
class InconsistentFamilyError : public Error {
 public:
  InconsistentFamilyError(std::string message, double max_offdiagonal)
      : Error(std::move(message)), max_offdiagonal_(max_offdiagonal) {}
  double max_offdiagonal() const { return max_offdiagonal_; }

 private:
  double max_offdiagonal_;
};

/// Malformed or unresolvable scenario file.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhl
