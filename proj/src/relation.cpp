#include "fdg3/relation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "fdg3/errors.hpp"

namespace fdg3 {

std::optional<size_t> Scheme::index_of(std::string_view name) const {
  for (size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i].name == name) return i;
  return std::nullopt;
}

size_t Scheme::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw ConfigError("unknown attribute '" + std::string(name) + "'");
  return *idx;
}

void Scheme::validate() const {
  std::set<std::string> seen;
  for (const auto& a : attributes) {
    if (a.name.empty()) throw DataError("empty attribute name");
    if (!seen.insert(a.name).second) throw DataError("duplicate attribute '" + a.name + "'");
  }
}

void Relation::validate() const {
  scheme.validate();
  for (size_t i = 0; i < tuples.size(); ++i) {
    const Tuple& t = tuples[i];
    if (t.index != i) throw DataError("tuple index out of order at row " + std::to_string(i));
    if (t.values.size() != scheme.attributes.size())
      throw DataError("row " + std::to_string(i + 1) + " has " + std::to_string(t.values.size()) +
                      " cells, expected " + std::to_string(scheme.attributes.size()));
    for (size_t c = 0; c < t.values.size(); ++c) {
      const Value& v = t.values[c];
      if (!v.is_null() && v.type() != scheme.attributes[c].type)
        throw DataError("row " + std::to_string(i + 1) + ", attribute '" +
                        scheme.attributes[c].name + "': value type mismatch");
    }
  }
}

FunctionalDependency::FunctionalDependency(std::vector<std::string> lhs_, std::string rhs_)
    : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  std::sort(lhs.begin(), lhs.end());
  lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
}

void FunctionalDependency::validate(const Scheme& scheme) const {
  if (lhs.empty()) throw ConfigError("functional dependency needs a nonempty lhs");
  for (const auto& name : lhs) scheme.require(name);
  scheme.require(rhs);
}

std::string FunctionalDependency::display() const {
  std::string out;
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (i) out += ",";
    out += lhs[i];
  }
  out += " -> ";
  out += rhs;
  return out;
}

std::vector<std::pair<std::string, Value>> project(const Scheme& scheme, const Tuple& t,
                                                   const std::vector<std::string>& attrs) {
  std::set<size_t> cols;
  for (const auto& name : attrs) cols.insert(scheme.require(name));
  std::vector<std::pair<std::string, Value>> out;
  out.reserve(cols.size());
  for (size_t c : cols) out.emplace_back(scheme.attributes[c].name, t.values[c]);
  return out;
}

namespace {

struct Cell {
  std::string raw;
  bool quoted = false;
};

// RFC-4180 splitter: quoted cells may contain commas, quotes ("" escape) and
// line breaks. Accepts LF and CRLF records.
std::vector<std::vector<Cell>> split_csv(std::string_view text) {
  std::vector<std::vector<Cell>> records;
  std::vector<Cell> record;
  Cell cell;
  bool in_quotes = false;
  bool cell_started = false;

  auto end_cell = [&] {
    record.push_back(std::move(cell));
    cell = Cell{};
    cell_started = false;
  };
  auto end_record = [&] {
    end_cell();
    records.push_back(std::move(record));
    record.clear();
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.raw += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.raw += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell_started && cell.raw.empty()) {
          in_quotes = true;
          cell.quoted = true;
          cell_started = true;
        } else {
          cell.raw += c;  // stray quote inside an unquoted cell, keep literal
        }
        break;
      case ',':
        end_cell();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;  // swallowed with the \n
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        cell.raw += c;
        cell_started = true;
        break;
    }
  }
  if (in_quotes) throw DataError("unterminated quoted cell");
  if (cell_started || !cell.raw.empty() || !record.empty()) end_record();
  return records;
}

bool parse_full_int(const std::string& s, int64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_full_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && std::isfinite(out);
}

constexpr const char* kNullLiteral = "NULL";

// Inferred value of one cell; quoted cells are opaque text and never null.
Value infer_cell(const Cell& cell) {
  if (cell.quoted) return Value::text(cell.raw);
  if (cell.raw == kNullLiteral) return Value::null();
  int64_t i;
  if (parse_full_int(cell.raw, i)) return Value::integer(i);
  double d;
  if (parse_full_double(cell.raw, d)) return Value::decimal(d);
  return Value::text(cell.raw);
}

Value coerce_cell(const Cell& cell, ValueType want, size_t row, const std::string& attr) {
  if (!cell.quoted && cell.raw == kNullLiteral) return Value::null();
  auto fail = [&]() -> Value {
    throw DataError("row " + std::to_string(row) + ", attribute '" + attr + "': cannot coerce '" +
                    cell.raw + "' to " + value_type_name(want));
  };
  switch (want) {
    case ValueType::Integer: {
      int64_t i;
      if (parse_full_int(cell.raw, i)) return Value::integer(i);
      return fail();
    }
    case ValueType::Decimal: {
      double d;
      if (parse_full_double(cell.raw, d)) return Value::decimal(d);
      int64_t i;
      if (parse_full_int(cell.raw, i)) return Value::decimal(static_cast<double>(i));
      return fail();
    }
    case ValueType::Text:
      return Value::text(cell.raw);
  }
  return fail();
}

ValueType widen(ValueType a, ValueType b) {
  if (a == ValueType::Text || b == ValueType::Text) return ValueType::Text;
  if (a == ValueType::Decimal || b == ValueType::Decimal) return ValueType::Decimal;
  return ValueType::Integer;
}

}  // namespace

Relation parse_relation_csv(std::string_view text, const std::optional<Scheme>& scheme_hint) {
  auto records = split_csv(text);
  if (records.empty()) throw DataError("empty header");
  const auto& header = records[0];
  if (header.empty() || (header.size() == 1 && header[0].raw.empty()))
    throw DataError("empty header");

  Scheme scheme;
  size_t ncols = header.size();
  for (const auto& h : header) scheme.attributes.push_back({h.raw, ValueType::Text});
  scheme.validate();

  if (scheme_hint) {
    if (scheme_hint->attributes.size() != ncols)
      throw DataError("header has " + std::to_string(ncols) + " attributes, scheme hint has " +
                      std::to_string(scheme_hint->attributes.size()));
    for (size_t c = 0; c < ncols; ++c)
      if (scheme_hint->attributes[c].name != scheme.attributes[c].name)
        throw DataError("header attribute '" + scheme.attributes[c].name +
                        "' does not match scheme hint attribute '" +
                        scheme_hint->attributes[c].name + "'");
    scheme = *scheme_hint;
  }

  Relation rel;
  size_t nrows = records.size() - 1;
  rel.tuples.reserve(nrows);

  for (size_t rr = 1; rr < records.size(); ++rr) {
    const auto& rec = records[rr];
    if (rec.size() != ncols)
      throw DataError("row " + std::to_string(rr) + " has " + std::to_string(rec.size()) +
                      " cells, expected " + std::to_string(ncols));
    Tuple t;
    t.index = rr - 1;
    t.values.reserve(ncols);
    for (size_t c = 0; c < ncols; ++c) {
      if (scheme_hint)
        t.values.push_back(coerce_cell(rec[c], scheme.attributes[c].type, rr, scheme.attributes[c].name));
      else
        t.values.push_back(infer_cell(rec[c]));
    }
    rel.tuples.push_back(std::move(t));
  }

  if (!scheme_hint) {
    // Unify each column to the widest inferred type, re-reading raw text for
    // cells that widen all the way to text.
    for (size_t c = 0; c < ncols; ++c) {
      bool saw_value = false;
      ValueType unified = ValueType::Integer;
      for (const auto& t : rel.tuples) {
        const Value& v = t.values[c];
        if (v.is_null()) continue;
        unified = saw_value ? widen(unified, v.type()) : v.type();
        saw_value = true;
      }
      if (!saw_value) unified = ValueType::Text;
      scheme.attributes[c].type = unified;
      for (size_t rr = 0; rr < rel.tuples.size(); ++rr) {
        Value& v = rel.tuples[rr].values[c];
        if (v.is_null() || v.type() == unified) continue;
        if (unified == ValueType::Decimal && v.is_integer())
          v = Value::decimal(static_cast<double>(v.as_integer()));
        else
          v = Value::text(records[rr + 1][c].raw);
      }
    }
  }

  rel.scheme = scheme;
  rel.validate();
  return rel;
}

namespace {

bool needs_quoting(const std::string& s) {
  if (s == kNullLiteral) return true;
  if (s.find_first_of(",\"\n\r") != std::string::npos) return true;
  int64_t i;
  double d;
  return parse_full_int(s, i) || parse_full_double(s, d);
}

std::string csv_cell(const Value& v) {
  if (v.is_null()) return kNullLiteral;
  if (v.is_integer()) return std::to_string(v.as_integer());
  if (v.is_decimal()) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v.as_decimal());
    (void)ec;
    std::string s(buf, p);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";  // keep the decimal tag
    return s;
  }
  const std::string& s = v.as_text();
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string serialize_relation_csv(const Relation& r) {
  // Header names are never typed, so only structural characters force quotes.
  auto header_cell = [](const std::string& name) {
    if (name.find_first_of(",\"\n\r") == std::string::npos) return name;
    std::string out = "\"";
    for (char c : name) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    return out + "\"";
  };
  std::string out;
  for (size_t c = 0; c < r.scheme.attributes.size(); ++c) {
    if (c) out += ',';
    out += header_cell(r.scheme.attributes[c].name);
  }
  out += '\n';
  for (const auto& t : r.tuples) {
    for (size_t c = 0; c < t.values.size(); ++c) {
      if (c) out += ',';
      out += csv_cell(t.values[c]);
    }
    out += '\n';
  }
  return out;
}

Relation dedup_relation(const Relation& r) {
  Relation out;
  out.scheme = r.scheme;
  for (const auto& t : r.tuples) {
    bool dup = false;
    for (const auto& kept : out.tuples) {
      if (kept.values == t.values) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      Tuple copy = t;
      copy.index = out.tuples.size();
      out.tuples.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace fdg3
