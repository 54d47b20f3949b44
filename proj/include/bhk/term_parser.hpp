#pragma once

// Shared tokenizer for the ASCII polynomial grammar:
//   poly   := term ('+' term)*
//   term   := [coeff '*'] factor ('*' factor)*
//   factor := var ['^' posint]
//   coeff  := ['-'] integer ['/' integer]
// A leading '-' on a term negates its coefficient, so "x0^2 - x1" is accepted
// as shorthand for "x0^2 + -1*x1".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhk/linalg.hpp"

namespace bhk {

struct ParsedFactor {
  std::string name;
  unsigned exponent = 1;
  std::size_t position = 0;
};

struct ParsedTerm {
  Rational coefficient{1};
  std::vector<ParsedFactor> factors;
  std::size_t position = 0;
};

/// A variable is a letter followed by letters, digits or '_', optionally
/// ending in apostrophes (y1'). Callers check names against their ring.
std::vector<ParsedTerm> parse_terms(std::string_view text);

} // namespace bhk
