#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hercule/ast.hpp"
#include "hercule/lexer.hpp"

namespace hercule {

// Grammar:
//   compact   := norm+
//   norm      := kind IDENT '(' IDENT '->' IDENT (',' IDENT)* ')' ':' state+
//   kind      := 'commitment' | 'prohibition' | 'authorization'
//   state     := IDENT ':' expr
//   expr      := andExpr ('or' andExpr)*
//   andExpr   := exExpr ('and' exExpr)*
//   exExpr    := atom ('except' atom)*
//   atom      := eventExpr | normRef | '(' expr ')'
//   eventExpr := IDENT '.' IDENT '{' IDENT (',' IDENT)* '}' ('@' timeAnnot)?
//   normRef   := IDENT '(' IDENT '->' IDENT (',' IDENT)* ')' ':' IDENT
//   timeAnnot := IDENT | IDENT cmp arith | '[' arith ',' arith ']'
//   arith     := IDENT (('+'|'-') INT)? | INT
//
// All binary operators are left-associative; `except` binds tighter than
// `and`, which binds tighter than `or`. A state head (`IDENT ':'`) is only
// recognized at the start of a line, except for the first state of a norm,
// which may follow the header on the same line.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  CompactSpec parse(std::string specName) {
    CompactSpec spec;
    spec.name = std::move(specName);
    while (!at(Tok::End)) spec.norms.push_back(parseNorm());
    std::set<std::string> seen;
    for (const auto& n : spec.norms) {
      if (!seen.insert(n.name).second)
        fail(Errc::DuplicateNormName, "norm '" + n.name + "' declared twice", n.pos);
    }
    return spec;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = idx_ + ahead;
    if (i >= toks_.size()) i = toks_.size() - 1;  // End token
    return toks_[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }

  const Token& expect(Tok k, const char* where) {
    if (!at(k)) {
      fail(Errc::SyntaxError,
           std::string("expected ") + tokName(k) + " " + where + ", got " + tokName(peek().kind),
           peek().pos);
    }
    return advance();
  }

  std::string expectIdent(const char* where) { return expect(Tok::Ident, where).text; }

  NormSpec parseNorm() {
    NormSpec norm;
    norm.pos = peek().pos;
    switch (peek().kind) {
      case Tok::KwCommitment:    norm.kind = NormKind::Commitment; break;
      case Tok::KwProhibition:   norm.kind = NormKind::Prohibition; break;
      case Tok::KwAuthorization: norm.kind = NormKind::Authorization; break;
      case Tok::Ident:
        fail(Errc::UnknownNormType, "'" + peek().text + "' is not a norm type", peek().pos);
      default:
        fail(Errc::SyntaxError,
             std::string("expected a norm declaration, got ") + tokName(peek().kind), peek().pos);
    }
    advance();
    norm.name = expectIdent("as norm name");
    expect(Tok::LParen, "after norm name");
    norm.expectee = expectIdent("as first role");
    expect(Tok::Arrow, "between roles");
    norm.expector = expectIdent("as second role");
    while (at(Tok::Comma)) {
      advance();
      norm.params.push_back(expectIdent("as norm parameter"));
    }
    expect(Tok::RParen, "after roles");
    expect(Tok::Colon, "after norm header");

    // First state may share the header's line; later heads are line-anchored.
    norm.states.push_back(parseState());
    while (at(Tok::Ident) && peek().startOfLine && peek(1).kind == Tok::Colon)
      norm.states.push_back(parseState());

    if (norm.states.front().first != "created")
      fail(Errc::MissingCreatedState,
           "norm '" + norm.name + "' must declare 'created' as its first state", norm.pos);
    std::set<std::string> seen;
    for (const auto& [name, f] : norm.states) {
      (void)f;
      if (!seen.insert(name).second)
        fail(Errc::DuplicateState, "state '" + name + "' declared twice in norm '" + norm.name + "'",
             norm.pos);
    }
    return norm;
  }

  std::pair<std::string, FormulaPtr> parseState() {
    std::string name = expectIdent("as state name");
    expect(Tok::Colon, "after state name");
    return {std::move(name), parseExpr()};
  }

  FormulaPtr parseExpr() {
    FormulaPtr l = parseAnd();
    while (at(Tok::KwOr)) {
      advance();
      l = Formula::mkOr(std::move(l), parseAnd());
    }
    return l;
  }

  FormulaPtr parseAnd() {
    FormulaPtr l = parseExcept();
    while (at(Tok::KwAnd)) {
      advance();
      l = Formula::mkAnd(std::move(l), parseExcept());
    }
    return l;
  }

  FormulaPtr parseExcept() {
    FormulaPtr l = parseAtom();
    while (at(Tok::KwExcept)) {
      advance();
      l = Formula::mkExcept(std::move(l), parseAtom());
    }
    return l;
  }

  FormulaPtr parseAtom() {
    if (at(Tok::LParen)) {
      advance();
      FormulaPtr f = parseExpr();
      expect(Tok::RParen, "to close grouped expression");
      return f;
    }
    if (!at(Tok::Ident))
      fail(Errc::SyntaxError,
           std::string("expected an event expression, norm reference or '(', got ") +
               tokName(peek().kind),
           peek().pos);
    if (peek(1).kind == Tok::Dot) return parseEventExpr();
    if (peek(1).kind == Tok::LParen) return parseNormRef();
    fail(Errc::SyntaxError, "expected '.' or '(' after '" + peek().text + "'", peek(1).pos);
  }

  FormulaPtr parseEventExpr() {
    Position pos = peek().pos;
    EventExpr e;
    e.role = expectIdent("as role");
    expect(Tok::Dot, "in event expression");
    e.event = expectIdent("as event name");
    expect(Tok::LBrace, "to open attribute list");
    e.attrs.push_back(expectIdent("as attribute name"));
    while (at(Tok::Comma)) {
      advance();
      e.attrs.push_back(expectIdent("as attribute name"));
    }
    expect(Tok::RBrace, "to close attribute list");
    if (at(Tok::At)) {
      advance();
      e.time = parseTimeAnnot();
    }
    return Formula::mkEvent(std::move(e), pos);
  }

  FormulaPtr parseNormRef() {
    Position pos = peek().pos;
    NormStateRef r;
    r.norm = expectIdent("as referenced norm");
    expect(Tok::LParen, "after referenced norm");
    r.roleArgs.push_back(expectIdent("as role argument"));
    expect(Tok::Arrow, "between role arguments");
    r.roleArgs.push_back(expectIdent("as role argument"));
    while (at(Tok::Comma)) {
      advance();
      r.paramArgs.push_back(expectIdent("as parameter argument"));
    }
    expect(Tok::RParen, "after reference arguments");
    expect(Tok::Colon, "before referenced state");
    r.state = expectIdent("as referenced state");
    return Formula::mkRef(std::move(r), pos);
  }

  TimeAnnot parseTimeAnnot() {
    if (at(Tok::LBrack)) {
      advance();
      TimeArith lo = parseArith();
      expect(Tok::Comma, "between interval bounds");
      TimeArith hi = parseArith();
      expect(Tok::RBrack, "to close interval");
      return TimeAnnot::interval(std::move(lo), std::move(hi));
    }
    const Token& t = peek();
    std::string var = expectIdent("as time variable");
    if (var == "now")
      fail(Errc::SyntaxError, "'now' is reserved and cannot label an event time", t.pos);
    CmpOp op;
    switch (peek().kind) {
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Gt: op = CmpOp::Gt; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      default:
        return TimeAnnot::label(std::move(var));
    }
    advance();
    return TimeAnnot::compare(std::move(var), op, parseArith());
  }

  TimeArith parseArith() {
    if (at(Tok::Int)) return TimeArith::literal(advance().value);
    std::string var = expectIdent("as time term");
    std::int64_t sign = 0;
    if (at(Tok::Plus)) sign = 1;
    else if (at(Tok::Minus)) sign = -1;
    if (sign == 0) return TimeArith::variable(std::move(var));
    advance();
    std::int64_t off = expect(Tok::Int, "as time offset").value;
    return TimeArith::variable(std::move(var), sign * off);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

inline CompactSpec parseCompact(std::vector<Token> tokens, std::string specName = "compact") {
  return Parser(std::move(tokens)).parse(std::move(specName));
}

inline CompactSpec parseCompact(std::string_view source, std::string specName = "compact") {
  return parseCompact(tokenize(source), std::move(specName));
}

}  // namespace hercule
