#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptspec {

// Base class for everything this library throws on invalid input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural misuse: mismatched phase spaces, maps that are not signed
// permutations, malformed grid specs, bad tolerances.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A monomial of degree > 2 where a quadratic Hamiltonian is required.
class NotQuadraticError : public Error {
 public:
  NotQuadraticError(std::string monomial, const std::string& what)
      : Error(what), monomial_(std::move(monomial)) {}
  const std::string& monomial() const { return monomial_; }

 private:
  std::string monomial_;
};

// A degree-1 term in a Hamiltonian handed to the adjoint construction.
class LinearTermError : public Error {
 public:
  LinearTermError(std::string monomial, const std::string& what)
      : Error(what), monomial_(std::move(monomial)) {}
  const std::string& monomial() const { return monomial_; }

 private:
  std::string monomial_;
};

// Nonzero odd-degree coefficient found while reducing lambda -> xi.
class OddTermError : public Error {
 public:
  OddTermError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Model-text syntax or resolution problem; carries 1-based source location.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A parameter value that makes the model singular (zero denominator,
// nonpositive mass or time constant).
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

// A parameter required by the model but absent from the binding.
class MissingParameterError : public Error {
 public:
  MissingParameterError(std::string name)
      : Error("missing value for parameter '" + name + "'"),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Filesystem failure while writing reports, CSV or PGM output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptspec
