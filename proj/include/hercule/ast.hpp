#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hercule/errors.hpp"

namespace hercule {

/// A time term: either a bare integer literal (var empty, offset = value)
/// or a time variable plus a constant offset, e.g. `t2+10`. The variable
/// `now` is reserved and refers to the evaluation clock.
struct TimeArith {
  std::string var;
  std::int64_t offset = 0;

  static TimeArith literal(std::int64_t v) { return TimeArith{"", v}; }
  static TimeArith variable(std::string name, std::int64_t off = 0) {
    return TimeArith{std::move(name), off};
  }

  bool isLiteral() const { return var.empty(); }
  bool operator==(const TimeArith& o) const { return var == o.var && offset == o.offset; }
  bool operator!=(const TimeArith& o) const { return !(*this == o); }
};

enum class CmpOp { Lt, Gt, Le, Ge };

inline const char* cmpOpText(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Gt: return ">";
    case CmpOp::Le: return "<=";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

/// `@`-annotation on an event expression. A Label names the event's time,
/// a Compare names it and constrains it against a term, an Interval brackets
/// it between two terms (binding nothing).
struct TimeAnnot {
  enum class Kind { Label, Compare, Interval };

  Kind kind = Kind::Label;
  std::string var;  // Label / Compare: the variable bound to this event's time
  CmpOp op = CmpOp::Gt;
  TimeArith rhs;  // Compare
  TimeArith lo, hi;  // Interval

  static TimeAnnot label(std::string v) {
    TimeAnnot a;
    a.kind = Kind::Label;
    a.var = std::move(v);
    return a;
  }
  static TimeAnnot compare(std::string v, CmpOp op, TimeArith rhs) {
    TimeAnnot a;
    a.kind = Kind::Compare;
    a.var = std::move(v);
    a.op = op;
    a.rhs = std::move(rhs);
    return a;
  }
  static TimeAnnot interval(TimeArith lo, TimeArith hi) {
    TimeAnnot a;
    a.kind = Kind::Interval;
    a.lo = std::move(lo);
    a.hi = std::move(hi);
    return a;
  }

  bool operator==(const TimeAnnot& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::Label:    return var == o.var;
      case Kind::Compare:  return var == o.var && op == o.op && rhs == o.rhs;
      case Kind::Interval: return lo == o.lo && hi == o.hi;
    }
    return false;
  }
  bool operator!=(const TimeAnnot& o) const { return !(*this == o); }
};

/// `role.Event{attr, ...} @ annot` — the atom of every state formula.
struct EventExpr {
  std::string role;
  std::string event;
  std::vector<std::string> attrs;
  std::optional<TimeAnnot> time;

  bool operator==(const EventExpr& o) const {
    return role == o.role && event == o.event && attrs == o.attrs && time == o.time;
  }
};

/// `Norm(role1->role2, params...):state` — reference to another norm's state.
struct NormStateRef {
  std::string norm;
  std::vector<std::string> roleArgs;   // exactly two
  std::vector<std::string> paramArgs;
  std::string state;

  bool operator==(const NormStateRef& o) const {
    return norm == o.norm && roleArgs == o.roleArgs && paramArgs == o.paramArgs &&
           state == o.state;
  }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Formula node. The parser produces Event/And/Or/Except/NormRef; state
/// derivation additionally introduces Not, LateAfter (now > deadline) and
/// Never (constant false), and eliminates NormRef by inlining.
struct Formula {
  enum class Kind { Event, And, Or, Except, NormRef, Not, LateAfter, Never };

  Kind kind;
  EventExpr event;       // Kind::Event
  NormStateRef ref;      // Kind::NormRef
  FormulaPtr left;       // And/Or/Except body, Not operand
  FormulaPtr right;      // And/Or right operand, Except exception
  TimeArith deadline;    // LateAfter
  Position pos;          // source position; ignored by equality

  static FormulaPtr mkEvent(EventExpr e, Position p = {}) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Event;
    f->event = std::move(e);
    f->pos = p;
    return f;
  }
  static FormulaPtr mkRef(NormStateRef r, Position p = {}) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::NormRef;
    f->ref = std::move(r);
    f->pos = p;
    return f;
  }
  static FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::And, std::move(l), std::move(r));
  }
  static FormulaPtr mkOr(FormulaPtr l, FormulaPtr r) {
    return binary(Kind::Or, std::move(l), std::move(r));
  }
  static FormulaPtr mkExcept(FormulaPtr body, FormulaPtr exception) {
    return binary(Kind::Except, std::move(body), std::move(exception));
  }
  static FormulaPtr mkNot(FormulaPtr f) {
    auto n = std::make_shared<Formula>();
    n->kind = Kind::Not;
    n->left = std::move(f);
    return n;
  }
  static FormulaPtr mkLateAfter(TimeArith deadline) {
    auto n = std::make_shared<Formula>();
    n->kind = Kind::LateAfter;
    n->deadline = std::move(deadline);
    return n;
  }
  static FormulaPtr mkNever() {
    auto n = std::make_shared<Formula>();
    n->kind = Kind::Never;
    return n;
  }

 private:
  static FormulaPtr binary(Kind k, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
  }
};

inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Event:     return a->event == b->event;
    case Formula::Kind::NormRef:   return a->ref == b->ref;
    case Formula::Kind::Never:     return true;
    case Formula::Kind::LateAfter: return a->deadline == b->deadline;
    case Formula::Kind::Not:       return equal(a->left, b->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Except:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
  return false;
}

enum class NormKind { Commitment, Prohibition, Authorization };

inline const char* normKindName(NormKind k) {
  switch (k) {
    case NormKind::Commitment:    return "commitment";
    case NormKind::Prohibition:   return "prohibition";
    case NormKind::Authorization: return "authorization";
  }
  return "?";
}

/// One parsed norm. The header roles are written `expectee->expector`
/// (for a commitment: debtor->creditor).
struct NormSpec {
  NormKind kind;
  std::string name;
  std::string expectee;
  std::string expector;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, FormulaPtr>> states;  // declared order, `created` first
  Position pos;

  const FormulaPtr* findState(const std::string& stateName) const {
    for (const auto& [n, f] : states)
      if (n == stateName) return &f;
    return nullptr;
  }
};

inline bool equal(const NormSpec& a, const NormSpec& b) {
  if (a.kind != b.kind || a.name != b.name || a.expectee != b.expectee ||
      a.expector != b.expector || a.params != b.params || a.states.size() != b.states.size())
    return false;
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    if (a.states[i].first != b.states[i].first) return false;
    if (!equal(a.states[i].second, b.states[i].second)) return false;
  }
  return true;
}

struct CompactSpec {
  std::string name;
  std::vector<NormSpec> norms;

  const NormSpec* findNorm(const std::string& normName) const {
    for (const auto& n : norms)
      if (n.name == normName) return &n;
    return nullptr;
  }
};

inline bool equal(const CompactSpec& a, const CompactSpec& b) {
  if (a.norms.size() != b.norms.size()) return false;
  for (std::size_t i = 0; i < a.norms.size(); ++i)
    if (!equal(a.norms[i], b.norms[i])) return false;
  return true;
}

/// Visit every node of a formula in textual (pre-, left-to-right) order.
template <typename F>
void walkFormula(const FormulaPtr& f, F&& visit) {
  if (!f) return;
  visit(*f);
  switch (f->kind) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Except:
      walkFormula(f->left, visit);
      walkFormula(f->right, visit);
      break;
    case Formula::Kind::Not:
      walkFormula(f->left, visit);
      break;
    default:
      break;
  }
}

}  // namespace hercule
