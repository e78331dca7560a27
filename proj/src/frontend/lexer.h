#pragma once

#include <string>
#include <vector>

#include "common/error.h"

namespace aoc {

enum class TokenKind {
  kIdent,
  kNumber,
  kString,
  kSymbol,
  kSystem,  // $finish, $display, ...
  kEof,
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  SourceLoc loc;
};

// Tokenizes one file. x/z digits in literals and compiler directives are
// rejected here with located errors.
std::vector<Token> Lex(const std::string& text, int file_index);

}  // namespace aoc
