#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hercule/token.hpp"

namespace hercule {

/// Tokenize a compact-spec source text. `#` starts a comment running to the
/// end of the line. Every token records its 1-based line/column and whether
/// it is the first token on its line (state heads are line-anchored).
inline std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  int line = 1, col = 1;
  bool lineHasToken = false;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto push = [&](Tok kind, Position pos, std::string text = {}, std::int64_t value = 0) {
    out.push_back(Token{kind, std::move(text), value, pos, !lineHasToken});
    lineHasToken = true;
  };

  while (i < n) {
    char c = source[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      lineHasToken = false;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < n && source[i] != '\n') ++i;
      continue;
    }

    Position pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
        ++i;
        ++col;
      }
      std::string word(source.substr(start, i - start));
      if (word == "commitment") push(Tok::KwCommitment, pos);
      else if (word == "prohibition") push(Tok::KwProhibition, pos);
      else if (word == "authorization") push(Tok::KwAuthorization, pos);
      else if (word == "and") push(Tok::KwAnd, pos);
      else if (word == "or") push(Tok::KwOr, pos);
      else if (word == "except") push(Tok::KwExcept, pos);
      else push(Tok::Ident, pos, std::move(word));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) {
        v = v * 10 + (source[i] - '0');
        ++i;
        ++col;
      }
      push(Tok::Int, pos, {}, v);
      continue;
    }

    auto two = [&](char a, char b) {
      return c == a && i + 1 < n && source[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::Arrow, pos); i += 2; col += 2; continue; }
    if (two('<', '=')) { push(Tok::Le, pos); i += 2; col += 2; continue; }
    if (two('>', '=')) { push(Tok::Ge, pos); i += 2; col += 2; continue; }

    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case ':': kind = Tok::Colon; break;
      case ',': kind = Tok::Comma; break;
      case '@': kind = Tok::At; break;
      case '.': kind = Tok::Dot; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      default:
        fail(Errc::IllegalCharacter,
             std::string("illegal character '") + c + "'", pos);
    }
    push(kind, pos);
    ++i;
    ++col;
  }

  out.push_back(Token{Tok::End, {}, 0, Position{line, col}, !lineHasToken});
  return out;
}

}  // namespace hercule
