#pragma once

#include <string>
#include <string_view>

#include "mcgaction/action.hpp"

namespace mcg {

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t column)
      : Error(message + " (column " + std::to_string(column + 1) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Whitespace-separated tokens ("a"|"b"|"g")<index>["^"<int>]; "1" is the
// empty word. Indices are range-checked against sig.
Word parse_pi1_word(std::string_view text, const Signature& sig);

// Tokens tb, tb<i>, ta<i>, tc1_2, tc<2i>_<2i+2>, td<i>, w<i> with the same
// exponent suffix. At g = 1, ta2 names the first lambda-type twist.
MCGWord parse_mcg_word(std::string_view text, const Signature& sig);

// Runs of equal letters print as one token with an exponent; inverse of
// parse_pi1_word on reduced words.
std::string to_string(const Word& w);

}  // namespace mcg
