#pragma once

#include <cstdint>
#include <string>

#include "hercule/errors.hpp"

namespace hercule {

enum class Tok {
  KwCommitment,
  KwProhibition,
  KwAuthorization,
  KwAnd,
  KwOr,
  KwExcept,
  Ident,
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBrack,
  RBrack,
  Colon,
  Comma,
  Arrow,
  At,
  Dot,
  Plus,
  Minus,
  Lt,
  Gt,
  Le,
  Ge,
  End,
};

inline const char* tokName(Tok t) {
  switch (t) {
    case Tok::KwCommitment:    return "'commitment'";
    case Tok::KwProhibition:   return "'prohibition'";
    case Tok::KwAuthorization: return "'authorization'";
    case Tok::KwAnd:           return "'and'";
    case Tok::KwOr:            return "'or'";
    case Tok::KwExcept:        return "'except'";
    case Tok::Ident:           return "identifier";
    case Tok::Int:             return "integer";
    case Tok::LParen:          return "'('";
    case Tok::RParen:          return "')'";
    case Tok::LBrace:          return "'{'";
    case Tok::RBrace:          return "'}'";
    case Tok::LBrack:          return "'['";
    case Tok::RBrack:          return "']'";
    case Tok::Colon:           return "':'";
    case Tok::Comma:           return "','";
    case Tok::Arrow:           return "'->'";
    case Tok::At:              return "'@'";
    case Tok::Dot:             return "'.'";
    case Tok::Plus:            return "'+'";
    case Tok::Minus:           return "'-'";
    case Tok::Lt:              return "'<'";
    case Tok::Gt:              return "'>'";
    case Tok::Le:              return "'<='";
    case Tok::Ge:              return "'>='";
    case Tok::End:             return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;          // identifier spelling (empty for punctuation)
  std::int64_t value = 0;    // integer literals
  Position pos;
  bool startOfLine = false;  // first token on its physical line
};

}  // namespace hercule
