#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace fdg3 {

enum class ValueType { Integer, Decimal, Text };

std::string value_type_name(ValueType t);
ValueType value_type_from_name(const std::string& name);

// A cell value: 64-bit integer, binary64 decimal, unicode text, or the
// distinguished null marker. operator== is structural identity (tag plus
// payload, null == null). The equality *predicate* is stricter: it never
// matches null, see predicates.hpp.
class Value {
 public:
  Value() : rep_(Null{}) {}

  static Value null() { return Value(); }
  static Value integer(int64_t v) { return Value(Rep(v)); }
  static Value decimal(double v);  // rejects non-finite payloads
  static Value text(std::string v) { return Value(Rep(std::move(v))); }

  bool is_null() const { return rep_.index() == 0; }
  bool is_integer() const { return rep_.index() == 1; }
  bool is_decimal() const { return rep_.index() == 2; }
  bool is_text() const { return rep_.index() == 3; }
  bool is_numeric() const { return is_integer() || is_decimal(); }

  int64_t as_integer() const { return std::get<1>(rep_); }
  double as_decimal() const { return std::get<2>(rep_); }
  const std::string& as_text() const { return std::get<3>(rep_); }

  // Numeric payload widened to long double (exact for int64 and binary64).
  long double numeric() const {
    return is_integer() ? static_cast<long double>(as_integer())
                        : static_cast<long double>(as_decimal());
  }

  ValueType type() const;  // must not be null

  friend bool operator==(const Value& a, const Value& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  // Deterministic global ordering used for sorted active domains and witness
  // selection: null < integer < decimal < text, then payload order.
  friend bool operator<(const Value& a, const Value& b);

  // Diagnostic rendering ("null", "1", "2.5", "\"abc\"").
  std::string repr() const;

 private:
  struct Null {
    bool operator==(const Null&) const { return true; }
    bool operator<(const Null&) const { return false; }
  };
  using Rep = std::variant<Null, int64_t, double, std::string>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

}  // namespace fdg3
