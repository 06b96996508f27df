#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by an identically zero expression") {}
};

// argument of a transcendental generator would itself contain one
class NestingError : public Error {
 public:
  using Error::Error;
};

// evaluation hit a vanishing denominator; caller should draw another point
class ResampleError : public Error {
 public:
  ResampleError() : Error("resample: denominator vanishes at point") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class NeedsRecipe : public Error {
 public:
  using Error::Error;
};

class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lieinv
