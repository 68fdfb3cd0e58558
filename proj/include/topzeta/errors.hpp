#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topzeta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial text could not be tokenized or did not match the grammar.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct ZeroPolynomialError : Error {
  ZeroPolynomialError() : Error("polynomial is identically zero") {}
};

struct OriginInSupportError : Error {
  OriginInSupportError() : Error("constant term present: f(0) != 0") {}
};

struct EmptySupportError : Error {
  EmptySupportError() : Error("empty support") {}
};

struct NotDivisibleError : Error {
  NotDivisibleError() : Error("numerator is not divisible by the linear factor") {}
};

struct WrongDimError : Error {
  explicit WrongDimError(const std::string& msg) : Error(msg) {}
};

struct NotAVertexError : Error {
  NotAVertexError() : Error("face is not a vertex") {}
};

struct BrokenFanError : Error {
  explicit BrokenFanError(const std::string& msg) : Error(msg) {}
};

struct DependentNormalsError : Error {
  DependentNormalsError() : Error("normals are linearly dependent") {}
};

struct NotCompactError : Error {
  NotCompactError() : Error("face is not compact") {}
};

struct InvalidParamsError : Error {
  explicit InvalidParamsError(const std::string& msg) : Error(msg) {}
};

}  // namespace topzeta
