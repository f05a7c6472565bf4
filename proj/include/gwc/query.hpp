#pragma once

#include "gwc/brackets.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwc {

// malformed text; position is a 0-based byte offset
struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg);
  std::size_t position;
};

// well-formed text that does not describe a valid bracket for the target
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bracket := "<" insertion* ("|" profiles)? ">"
// insertion := "t" INT "(" class ")" ; class := "1" | "w" | "a" INT | "b" INT
// profiles := partition (";" partition)* ; partition := "(" INT ("," INT)* ")"
Bracket parse_expression(std::string_view text, int genus, int degree);
std::string render(const Bracket& b);

}  // namespace gwc
