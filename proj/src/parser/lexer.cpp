#include "lexer.hpp"

#include <cctype>

#include "axiomtest/parser.hpp"

namespace axiomtest::detail {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kNat: return "numeral";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kColon: return "':'";
    case Tok::kCons: return "'::'";
    case Tok::kArrow: return "'->'";
    case Tok::kImplies: return "'=>'";
    case Tok::kEquals: return "'='";
    case Tok::kAmp: return "'&'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceSpan span{file, line, col};
    auto emit = [&](Tok k, std::string t, std::size_t len) {
      out.push_back({k, std::move(t), span});
      advance(len);
    };
    if (starts("__::__")) {
      emit(Tok::kIdent, "::", 6);
    } else if (starts("[]")) {
      emit(Tok::kIdent, "[]", 2);
    } else if (starts("::")) {
      emit(Tok::kCons, "::", 2);
    } else if (starts("->")) {
      emit(Tok::kArrow, "->", 2);
    } else if (starts("=>")) {
      emit(Tok::kImplies, "=>", 2);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::kIdent, std::string(text.substr(i, j - i)), j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      emit(Tok::kNat, std::string(text.substr(i, j - i)), j - i);
    } else {
      switch (c) {
        case '(': emit(Tok::kLParen, "(", 1); break;
        case ')': emit(Tok::kRParen, ")", 1); break;
        case '[': emit(Tok::kLBracket, "[", 1); break;
        case ']': emit(Tok::kRBracket, "]", 1); break;
        case ',': emit(Tok::kComma, ",", 1); break;
        case ':': emit(Tok::kColon, ":", 1); break;
        case '=': emit(Tok::kEquals, "=", 1); break;
        case '&': emit(Tok::kAmp, "&", 1); break;
        default:
          throw ParseError(span, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::kEnd, "", {file, line, col}});
  return out;
}

}  // namespace axiomtest::detail
