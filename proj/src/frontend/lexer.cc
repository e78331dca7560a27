#include "frontend/lexer.h"

#include <cctype>

namespace aoc {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool IsNumberChar(char c) {
  // Characters that may appear inside a literal once started, including the
  // base letters and hex digits. 'x'/'z' are consumed here and rejected below.
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '?';
}

}  // namespace

std::vector<Token> Lex(const std::string& text, int file_index) {
  std::vector<Token> tokens;
  size_t i = 0;
  int line = 1;
  int column = 1;

  auto loc_here = [&]() { return SourceLoc{file_index, line, column}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (i < text.size() && text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto push = [&](TokenKind kind, std::string value, SourceLoc loc) {
    tokens.push_back(Token{kind, std::move(value), loc});
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      SourceLoc start = loc_here();
      advance(2);
      bool closed = false;
      while (i + 1 < text.size()) {
        if (text[i] == '*' && text[i + 1] == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance(1);
      }
      if (!closed) Raise(ErrorKind::kSyntax, "unterminated block comment", start);
      continue;
    }
    if (c == '`') {
      Raise(ErrorKind::kUnsupportedConstruct,
            "compiler directives are not supported", loc_here());
    }
    if (c == '"') {
      SourceLoc start = loc_here();
      advance(1);
      std::string value;
      bool closed = false;
      while (i < text.size()) {
        char ch = text[i];
        if (ch == '"') {
          advance(1);
          closed = true;
          break;
        }
        if (ch == '\\' && i + 1 < text.size()) {
          char esc = text[i + 1];
          switch (esc) {
            case 'n': value.push_back('\n'); break;
            case 't': value.push_back('\t'); break;
            default: value.push_back(esc); break;
          }
          advance(2);
          continue;
        }
        value.push_back(ch);
        advance(1);
      }
      if (!closed) Raise(ErrorKind::kSyntax, "unterminated string", start);
      push(TokenKind::kString, value, start);
      continue;
    }
    if (c == '$') {
      SourceLoc start = loc_here();
      size_t begin = i;
      advance(1);
      while (i < text.size() && IsIdentChar(text[i])) advance(1);
      push(TokenKind::kSystem, text.substr(begin, i - begin), start);
      continue;
    }
    if (IsIdentStart(c)) {
      SourceLoc start = loc_here();
      size_t begin = i;
      while (i < text.size() && IsIdentChar(text[i])) advance(1);
      push(TokenKind::kIdent, text.substr(begin, i - begin), start);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
      SourceLoc start = loc_here();
      size_t begin = i;
      while (i < text.size() && IsNumberChar(text[i])) {
        // A base letter may be followed by hex digits; a trailing tick starts
        // the based part of a sized literal (e.g. 8'hff).
        advance(1);
      }
      std::string lit = text.substr(begin, i - begin);
      for (char d : lit) {
        if (d == 'x' || d == 'X' || d == 'z' || d == 'Z' || d == '?') {
          Raise(ErrorKind::kUnsupportedConstruct,
                "x/z digits are not supported in literals ('" + lit + "')",
                start);
        }
      }
      push(TokenKind::kNumber, lit, start);
      continue;
    }

    // Multi-character operators first.
    SourceLoc start = loc_here();
    auto two = [&](const char* s) {
      return i + 1 < text.size() && text[i] == s[0] && text[i + 1] == s[1];
    };
    static const char* kTwoChar[] = {"<=", ">=", "==", "!=", "&&",
                                     "||", "<<", ">>", "~^", "^~"};
    bool matched = false;
    for (const char* op : kTwoChar) {
      if (two(op)) {
        push(TokenKind::kSymbol, op, start);
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;

    static const std::string kSingle = "()[]{};,:.#@=?+-*/%&|^~!<>";
    if (kSingle.find(c) != std::string::npos) {
      push(TokenKind::kSymbol, std::string(1, c), start);
      advance(1);
      continue;
    }
    Raise(ErrorKind::kSyntax,
          std::string("unexpected character '") + c + "'", start);
  }
  tokens.push_back(Token{TokenKind::kEof, "", loc_here()});
  return tokens;
}

}  // namespace aoc
