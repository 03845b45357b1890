#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "json.hpp"

#include "hercule/errors.hpp"

namespace hercule {

// All document JSON is serialized with insertion-ordered keys so that
// persisted stores and emitted design documents are byte-reproducible.
using Json = nlohmann::ordered_json;

/// Scalar attribute value: a string (dates are ISO strings) or an integer.
class Value {
 public:
  Value() : v_(std::string{}) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(std::int64_t n) : v_(n) {}
  Value(int n) : v_(static_cast<std::int64_t>(n)) {}

  bool isString() const { return std::holds_alternative<std::string>(v_); }
  bool isInt() const { return std::holds_alternative<std::int64_t>(v_); }

  const std::string& asString() const { return std::get<std::string>(v_); }
  std::int64_t asInt() const { return std::get<std::int64_t>(v_); }

  bool operator==(const Value& o) const { return v_ == o.v_; }
  bool operator!=(const Value& o) const { return !(*this == o); }

  bool equalsString(const std::string& s) const { return isString() && asString() == s; }

  Json toJson() const {
    if (isString()) return asString();
    return asInt();
  }

  static Value fromJson(const Json& j, Errc onBadType = Errc::InvalidEvent) {
    if (j.is_string()) return Value(j.get<std::string>());
    if (j.is_number_integer()) return Value(j.get<std::int64_t>());
    fail(onBadType, "attribute values must be strings or integers, got " + std::string(j.type_name()));
  }

  std::string repr() const {
    if (isString()) return asString();
    return std::to_string(asInt());
  }

 private:
  std::variant<std::string, std::int64_t> v_;
};

}  // namespace hercule
