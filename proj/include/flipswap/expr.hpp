#pragma once

// Parser for the language-expression mini-grammar used by the CLI:
//
//   expr    := term ('|' term)*            union
//   term    := factor ('&' factor)*        intersection
//   factor  := primary ('/' bits)*         quotient by a suffix
//   primary := name [ '(' args ')' ] | '(' expr ')'
//   args    := [ arg (',' arg)* ]          digit strings; each language
//                                          interprets them as an integer
//                                          or a binary string
//
// Example: "necklace & weight_le(3)".  Atoms are built at length n under
// the given pivot; a quotient shortens the resulting language by the
// suffix length.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flipswap/language.hpp"

namespace flipswap {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " +
                           expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

struct ExprContext {
  int n = 0;
  int pivot = 1;
  std::optional<KnapsackParams> knapsack;
};

MembershipTester parse_language_expr(std::string_view text, const ExprContext& context);

}  // namespace flipswap
