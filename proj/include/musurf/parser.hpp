#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "musurf/polynomial.hpp"

namespace musurf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: integers, rationals "p/q", declared variables, operators + - * ^,
// parentheses. '*' is mandatory between factors, '^' takes a nonnegative
// integer exponent, whitespace is insignificant. Unary minus is accepted.
Polynomial parse_poly(const std::string& text, std::span<const Var> vars);

}  // namespace musurf
