#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kfv::cli {

/// Nine significant digits in scientific notation, independent of the locale.
inline std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 8);
  return std::string(buf, res.ptr);
}

inline void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

inline std::string quoted(std::string_view s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + '"';
}

/// Minimal ordered JSON writer; numbers go through num() so the document is
/// byte-stable. Values are raw JSON fragments.
class JsonObject {
 public:
  JsonObject& field(std::string_view key, std::string raw) {
    fields_.emplace_back(quoted(key), std::move(raw));
    return *this;
  }
  JsonObject& number(std::string_view key, double v) {
    // JSON has no nan/inf literals
    return field(key, std::isfinite(v) ? num(v) : quoted(num(v)));
  }
  JsonObject& boolean(std::string_view key, bool v) { return field(key, v ? "true" : "false"); }
  JsonObject& string(std::string_view key, std::string_view v) { return field(key, quoted(v)); }

  std::string render(int indent = 0) const {
    const std::string pad(indent + 2, ' ');
    std::string s = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      s += pad + fields_[i].first + ": " + fields_[i].second;
      s += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    return s + std::string(indent, ' ') + "}";
  }

  /// Compact single-line form for array members.
  std::string inline_render() const {
    std::string s = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) s += ", ";
      s += fields_[i].first + ": " + fields_[i].second;
    }
    return s + "}";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string json_array(const std::vector<std::string>& items, int indent) {
  if (items.empty()) return "[]";
  const std::string pad(indent + 2, ' ');
  std::string s = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    s += pad + items[i];
    s += i + 1 < items.size() ? ",\n" : "\n";
  }
  return s + std::string(indent, ' ') + "]";
}

}  // namespace kfv::cli
