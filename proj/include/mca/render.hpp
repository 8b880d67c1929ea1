#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mca/dataset.hpp"
#include "mca/integer.hpp"
#include "mca/monoid.hpp"

namespace mca {

using Report = nlohmann::ordered_json;

enum class ReportFormat { Table, Json };

/// "x2x3x4x5^2x6^2x7^2"; "1" for the zero vector.
inline std::string render_monomial(const IntVector& v, const std::string& var = "x") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    s += var + std::to_string(i + 1);
    if (v[i] > 1) s += "^" + v[i].str();
  }
  return s.empty() ? "1" : s;
}

inline std::string render_monomial(const CharVector& v, const std::string& var = "x") {
  return render_monomial(v.coords(), var);
}

inline Report integer_json(const Integer& v) { return Report(detail::write_integer(v)); }

inline Report integer_list_json(const std::vector<Integer>& v) {
  Report out = Report::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

inline Report monomial_list_json(const std::vector<CharVector>& v, const std::string& var = "x") {
  Report out = Report::array();
  for (const auto& x : v) out.push_back(render_monomial(x, var));
  return out;
}

namespace detail {

inline std::string table_key(std::string key) {
  for (auto& c : key)
    if (c == '_') c = ' ';
  return key;
}

inline std::string table_scalar(const Report& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool is_flat_array(const Report& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured() || x.is_string()) return false;
  return true;
}

inline void render_table_into(const Report& v, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_structured() && !is_flat_array(val)) {
        out += pad + table_key(key) + ":";
        if (val.empty()) {
          out += " none\n";
          continue;
        }
        out += "\n";
        render_table_into(val, indent + 2, out);
      } else if (val.is_array() && val.empty()) {
        out += pad + table_key(key) + ": none\n";
      } else if (val.is_array()) {
        std::string row;
        for (const auto& x : val) row += (row.empty() ? "" : ", ") + table_scalar(x);
        out += pad + table_key(key) + ": (" + row + ")\n";
      } else {
        out += pad + table_key(key) + ": " + table_scalar(val) + "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        std::string inner;
        render_table_into(x, indent + 2, inner);
        inner.replace(indent, 2, "- ");
        out += inner;
      } else if (is_flat_array(x)) {
        std::string row;
        for (const auto& y : x) row += (row.empty() ? "" : ", ") + table_scalar(y);
        out += pad + "(" + row + ")\n";
      } else {
        out += pad + table_scalar(x) + "\n";
      }
    }
  } else {
    out += pad + table_scalar(v) + "\n";
  }
}

}  // namespace detail

/// Human-readable rendering: keys with spaces, booleans as yes/no, nested
/// values indented.
inline std::string render_table(const Report& r) {
  std::string out;
  detail::render_table_into(r, 0, out);
  return out;
}

/// Reports in input order. Table blocks are separated by blank lines; JSON is
/// one document with the reports under "reports".
inline std::string emit_report(const std::string& command, const std::vector<Report>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Report doc;
    doc["command"] = command;
    doc["reports"] = Report::array();
    for (const auto& r : reports) doc["reports"].push_back(r);
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += "\n";
    out += render_table(reports[i]);
  }
  return out;
}

}  // namespace mca
