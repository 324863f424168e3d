#include "fdg3/value.hpp"

#include <charconv>
#include <cmath>

#include "fdg3/errors.hpp"

namespace fdg3 {

std::string value_type_name(ValueType t) {
  switch (t) {
    case ValueType::Integer: return "integer";
    case ValueType::Decimal: return "decimal";
    case ValueType::Text: return "text";
  }
  return "?";
}

ValueType value_type_from_name(const std::string& name) {
  if (name == "integer") return ValueType::Integer;
  if (name == "decimal") return ValueType::Decimal;
  if (name == "text") return ValueType::Text;
  throw ConfigError("unknown attribute type '" + name + "'");
}

Value Value::decimal(double v) {
  if (!std::isfinite(v)) throw DataError("decimal values must be finite");
  return Value(Rep(v));
}

ValueType Value::type() const {
  switch (rep_.index()) {
    case 1: return ValueType::Integer;
    case 2: return ValueType::Decimal;
    case 3: return ValueType::Text;
    default: throw DataError("null has no value type");
  }
}

bool operator<(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() < b.rep_.index();
  switch (a.rep_.index()) {
    case 0: return false;
    case 1: return std::get<1>(a.rep_) < std::get<1>(b.rep_);
    case 2: return std::get<2>(a.rep_) < std::get<2>(b.rep_);
    default: return std::get<3>(a.rep_) < std::get<3>(b.rep_);
  }
}

std::string Value::repr() const {
  switch (rep_.index()) {
    case 0: return "null";
    case 1: return std::to_string(std::get<1>(rep_));
    case 2: {
      char buf[32];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, std::get<2>(rep_));
      (void)ec;
      return std::string(buf, p);
    }
    default: return "\"" + std::get<3>(rep_) + "\"";
  }
}

}  // namespace fdg3
