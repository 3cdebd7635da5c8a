#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "axiomtest/core.hpp"

namespace axiomtest::detail {

enum class Tok {
  kIdent,
  kNat,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kColon,
  kCons,     // ::
  kArrow,    // ->
  kImplies,  // =>
  kEquals,
  kAmp,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(Tok kind);

/// Throws ParseError on characters outside the token alphabet.
std::vector<Token> tokenize(std::string_view text, const std::string& file);

}  // namespace axiomtest::detail
