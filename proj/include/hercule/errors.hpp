#pragma once

#include <stdexcept>
#include <string>

namespace hercule {

struct Position {
  int line = 0;  // 1-based; 0 means "no position"
  int column = 0;

  bool known() const { return line > 0; }
};

enum class Errc {
  // lexing / parsing
  IllegalCharacter,
  SyntaxError,
  UnknownNormType,
  DuplicateNormName,
  DuplicateState,
  MissingCreatedState,
  // resolution
  UnresolvedNormRef,
  UnboundTimeVariable,
  ArityMismatch,
  CyclicNormReference,
  // ledger store
  DuplicateHistoryId,
  UnknownHistory,
  DuplicateEventName,
  NonMonotonicTime,
  ConflictingAttribute,
  InvalidEvent,
  CorruptLog,
  // views
  UnknownNorm,
  UnknownState,
  // design-document backend
  UnsupportedConstruct,
  ServerUnavailable,
  ServerRejectedDesignDoc,
};

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::IllegalCharacter:        return "IllegalCharacter";
    case Errc::SyntaxError:             return "SyntaxError";
    case Errc::UnknownNormType:         return "UnknownNormType";
    case Errc::DuplicateNormName:       return "DuplicateNormName";
    case Errc::DuplicateState:          return "DuplicateState";
    case Errc::MissingCreatedState:     return "MissingCreatedState";
    case Errc::UnresolvedNormRef:       return "UnresolvedNormRef";
    case Errc::UnboundTimeVariable:     return "UnboundTimeVariable";
    case Errc::ArityMismatch:           return "ArityMismatch";
    case Errc::CyclicNormReference:     return "CyclicNormReference";
    case Errc::DuplicateHistoryId:      return "DuplicateHistoryId";
    case Errc::UnknownHistory:          return "UnknownHistory";
    case Errc::DuplicateEventName:      return "DuplicateEventName";
    case Errc::NonMonotonicTime:        return "NonMonotonicTime";
    case Errc::ConflictingAttribute:    return "ConflictingAttribute";
    case Errc::InvalidEvent:            return "InvalidEvent";
    case Errc::CorruptLog:              return "CorruptLog";
    case Errc::UnknownNorm:             return "UnknownNorm";
    case Errc::UnknownState:            return "UnknownState";
    case Errc::UnsupportedConstruct:    return "UnsupportedConstruct";
    case Errc::ServerUnavailable:       return "ServerUnavailable";
    case Errc::ServerRejectedDesignDoc: return "ServerRejectedDesignDoc";
  }
  return "UnknownError";
}

/// Every failure in the library is reported as an Error carrying a code,
/// a human-readable message, and (for source-level problems) a position.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, Position pos = {})
      : std::runtime_error(format(code, message, pos)), code_(code), pos_(pos) {}

  Errc code() const { return code_; }
  Position position() const { return pos_; }

 private:
  static std::string format(Errc code, const std::string& message, Position pos) {
    std::string s = errcName(code);
    s += ": ";
    s += message;
    if (pos.known()) {
      s += " (line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ")";
    }
    return s;
  }

  Errc code_;
  Position pos_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, Position pos = {}) {
  throw Error(code, message, pos);
}

}  // namespace hercule
