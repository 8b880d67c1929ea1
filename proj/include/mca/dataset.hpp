#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mca/cyclotomic.hpp"
#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/monoid.hpp"

namespace mca {

struct IrrInfo {
  std::string label;
  Integer degree;
  friend bool operator==(const IrrInfo&, const IrrInfo&) = default;
};

struct InducedRow {
  std::optional<Integer> subgroup_order;
  std::optional<Integer> count;
  IntVector row;
  friend bool operator==(const InducedRow&, const InducedRow&) = default;
};

struct QuotientRef {
  std::string name;
  std::vector<std::size_t> kernel_indices;  ///< 1-based
  std::optional<std::string> dataset;
  friend bool operator==(const QuotientRef&, const QuotientRef&) = default;
};

struct SupertheorySpec {
  std::string name;
  std::vector<std::vector<std::size_t>> blocks;  ///< 1-based character indices
  std::optional<std::vector<std::vector<std::size_t>>> superclasses;  ///< 1-based class indices
  friend bool operator==(const SupertheorySpec&, const SupertheorySpec&) = default;
};

/// A group's character-theoretic data as read from a schema-1 file.
struct GroupCharData {
  int schema_version = 1;
  std::string name;
  Integer order;
  std::vector<IrrInfo> irr;
  std::vector<InducedRow> induced_rows;
  std::optional<std::vector<Integer>> classes;
  std::optional<CyclotomicTable> char_values;
  std::vector<QuotientRef> quotients;
  std::vector<SupertheorySpec> supertheories;
  std::optional<std::vector<std::size_t>> irr_permutation;

  std::size_t rank() const { return irr.size(); }

  friend bool operator==(const GroupCharData&, const GroupCharData&) = default;

  std::vector<Integer> degrees() const {
    std::vector<Integer> out;
    for (const auto& i : irr) out.push_back(i.degree);
    return out;
  }

  const SupertheorySpec* find_theory(const std::string& theory) const {
    for (const auto& t : supertheories)
      if (t.name == theory) return &t;
    return nullptr;
  }
};

namespace detail {

using Json = nlohmann::json;

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& msg) {
  fail(ErrorKind::SchemaError, path + ": " + msg);
}

inline const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing field");
  return *it;
}

inline Integer read_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      schema_fail(path, "expected a decimal integer string, got \"" + s + "\"");
    return Integer(s);
  }
  schema_fail(path, "expected an integer");
}

inline std::size_t read_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema_fail(path, "expected a positive index");
  auto v = j.get<std::uint64_t>();
  if (v == 0) schema_fail(path, "indices are 1-based");
  return static_cast<std::size_t>(v);
}

inline std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

inline const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

inline IntVector read_int_vector(const Json& j, const std::string& path) {
  IntVector out;
  const auto& a = read_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_integer(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::size_t> read_index_list(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  const auto& a = read_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_index(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<std::size_t>> read_partition(const Json& j, const std::string& path) {
  std::vector<std::vector<std::size_t>> out;
  const auto& a = read_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_index_list(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json write_integer(const Integer& v) {
  static const Integer limit = (Integer(1) << 53) - 1;
  if (v <= limit && v >= -limit) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

}  // namespace detail

/// Parse and validate a schema-1 dataset.
inline GroupCharData parse_dataset(const std::string& text) {
  using detail::field;
  using detail::Json;
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::SchemaError, std::string("$: invalid JSON: ") + e.what());
  }
  GroupCharData d;
  const auto& version = field(root, "schema_version", "$");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
    detail::schema_fail("$.schema_version", "only schema version 1 is supported");
  const auto& group = field(root, "group", "$");
  d.name = detail::read_string(field(group, "name", "$.group"), "$.group.name");
  d.order = detail::read_integer(field(group, "order", "$.group"), "$.group.order");

  const auto& irr = detail::read_array(field(root, "irr", "$"), "$.irr");
  for (std::size_t i = 0; i < irr.size(); ++i) {
    std::string path = "$.irr[" + std::to_string(i) + "]";
    d.irr.push_back({detail::read_string(field(irr[i], "label", path), path + ".label"),
                     detail::read_integer(field(irr[i], "degree", path), path + ".degree")});
  }
  if (d.irr.empty()) fail(ErrorKind::InvariantViolation, "no irreducible characters listed");
  if (d.irr.front().degree != 1)
    fail(ErrorKind::InvariantViolation, "trivial character first: irr[0] has degree " + d.irr.front().degree.str());
  for (std::size_t i = 0; i < d.irr.size(); ++i)
    if (d.irr[i].degree <= 0)
      fail(ErrorKind::InvariantViolation, "degree of irr[" + std::to_string(i) + "] is not positive");
  const std::size_t r = d.irr.size();

  const auto& rows = detail::read_array(field(root, "induced_rows", "$"), "$.induced_rows");
  bool trivial_row = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string path = "$.induced_rows[" + std::to_string(i) + "]";
    InducedRow row;
    row.row = detail::read_int_vector(field(rows[i], "row", path), path + ".row");
    if (row.row.size() != r)
      detail::schema_fail(path + ".row", "induced row " + std::to_string(i) + " has " +
                                             std::to_string(row.row.size()) + " entries, expected " +
                                             std::to_string(r));
    if (rows[i].contains("subgroup_order"))
      row.subgroup_order = detail::read_integer(rows[i]["subgroup_order"], path + ".subgroup_order");
    if (rows[i].contains("count")) row.count = detail::read_integer(rows[i]["count"], path + ".count");
    if (!vec::is_nonnegative(row.row))
      fail(ErrorKind::InvariantViolation, "induced row " + std::to_string(i) + " has a negative entry");
    if (row.row == vec::unit(r, 0)) trivial_row = true;
    if (row.subgroup_order) {
      if (*row.subgroup_order <= 0 || d.order % *row.subgroup_order != 0)
        fail(ErrorKind::InvariantViolation,
             "induced row " + std::to_string(i) + ": subgroup order does not divide the group order");
      if (vec::dot(row.row, d.degrees()) != d.order / *row.subgroup_order)
        fail(ErrorKind::InvariantViolation, "induced row " + std::to_string(i) +
                                                ": degree differs from the subgroup index (row·degrees ≠ order/subgroup_order)");
    }
    d.induced_rows.push_back(std::move(row));
  }
  if (!trivial_row) fail(ErrorKind::InvariantViolation, "the row of the trivial character (e1) is missing");

  if (root.contains("classes")) d.classes = detail::read_int_vector(root["classes"], "$.classes");
  if (root.contains("char_values")) {
    const auto& cv = root["char_values"];
    CyclotomicTable t;
    Integer n = detail::read_integer(field(cv, "conductor", "$.char_values"), "$.char_values.conductor");
    if (n <= 0) detail::schema_fail("$.char_values.conductor", "conductor must be positive");
    t.conductor = static_cast<std::size_t>(n);
    const auto& vals = detail::read_array(field(cv, "values", "$.char_values"), "$.char_values.values");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      std::string path = "$.char_values.values[" + std::to_string(i) + "]";
      std::vector<IntVector> per_class;
      const auto& cls = detail::read_array(vals[i], path);
      for (std::size_t c = 0; c < cls.size(); ++c) {
        std::string cpath = path + "[" + std::to_string(c) + "]";
        per_class.push_back(detail::read_int_vector(cls[c], cpath));
        if (per_class.back().size() != t.conductor)
          detail::schema_fail(cpath, "expected " + std::to_string(t.conductor) + " cyclotomic coordinates");
      }
      t.values.push_back(std::move(per_class));
    }
    d.char_values = std::move(t);
  }
  if (root.contains("quotients")) {
    const auto& qs = detail::read_array(root["quotients"], "$.quotients");
    for (std::size_t i = 0; i < qs.size(); ++i) {
      std::string path = "$.quotients[" + std::to_string(i) + "]";
      QuotientRef q;
      q.name = detail::read_string(field(qs[i], "name", path), path + ".name");
      q.kernel_indices = detail::read_index_list(field(qs[i], "kernel_indices", path), path + ".kernel_indices");
      if (qs[i].contains("dataset")) q.dataset = detail::read_string(qs[i]["dataset"], path + ".dataset");
      d.quotients.push_back(std::move(q));
    }
  }
  if (root.contains("supertheories")) {
    const auto& ts = detail::read_array(root["supertheories"], "$.supertheories");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::string path = "$.supertheories[" + std::to_string(i) + "]";
      SupertheorySpec t;
      t.name = detail::read_string(field(ts[i], "name", path), path + ".name");
      t.blocks = detail::read_partition(field(ts[i], "blocks", path), path + ".blocks");
      if (ts[i].contains("superclasses"))
        t.superclasses = detail::read_partition(ts[i]["superclasses"], path + ".superclasses");
      d.supertheories.push_back(std::move(t));
    }
  }
  if (root.contains("irr_permutation"))
    d.irr_permutation = detail::read_index_list(root["irr_permutation"], "$.irr_permutation");
  return d;
}

inline GroupCharData load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::SchemaError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

/// Schema-1 JSON for d; parse_dataset(serialize_dataset(d).dump()) reproduces d.
inline nlohmann::ordered_json serialize_dataset(const GroupCharData& d) {
  using J = nlohmann::ordered_json;
  auto integer = [](const Integer& v) { return J(detail::write_integer(v)); };
  auto ints = [&](const IntVector& v) {
    J a = J::array();
    for (const auto& x : v) a.push_back(integer(x));
    return a;
  };
  auto partition = [](const std::vector<std::vector<std::size_t>>& p) {
    J a = J::array();
    for (const auto& b : p) a.push_back(J(b));
    return a;
  };
  J out;
  out["schema_version"] = d.schema_version;
  out["group"] = {{"name", d.name}, {"order", integer(d.order)}};
  J irr = J::array();
  for (const auto& i : d.irr) irr.push_back({{"label", i.label}, {"degree", integer(i.degree)}});
  out["irr"] = irr;
  J rows = J::array();
  for (const auto& r : d.induced_rows) {
    J row;
    if (r.subgroup_order) row["subgroup_order"] = integer(*r.subgroup_order);
    if (r.count) row["count"] = integer(*r.count);
    row["row"] = ints(r.row);
    rows.push_back(row);
  }
  out["induced_rows"] = rows;
  if (d.classes) out["classes"] = ints(*d.classes);
  if (d.char_values) {
    J vals = J::array();
    for (const auto& per_class : d.char_values->values) {
      J c = J::array();
      for (const auto& v : per_class) c.push_back(ints(v));
      vals.push_back(c);
    }
    out["char_values"] = {{"conductor", d.char_values->conductor}, {"values", vals}};
  }
  if (!d.supertheories.empty()) {
    J ts = J::array();
    for (const auto& t : d.supertheories) {
      J tj;
      tj["name"] = t.name;
      tj["blocks"] = partition(t.blocks);
      if (t.superclasses) tj["superclasses"] = partition(*t.superclasses);
      ts.push_back(tj);
    }
    out["supertheories"] = ts;
  }
  if (!d.quotients.empty()) {
    J qs = J::array();
    for (const auto& q : d.quotients) {
      J qj;
      qj["name"] = q.name;
      qj["kernel_indices"] = q.kernel_indices;
      if (q.dataset) qj["dataset"] = *q.dataset;
      qs.push_back(qj);
    }
    out["quotients"] = qs;
  }
  if (d.irr_permutation) out["irr_permutation"] = *d.irr_permutation;
  return out;
}

/// The monoid generated by all induced rows (zero and repeated rows dropped).
inline MonoidPresentation monoid_of(const GroupCharData& d) {
  std::vector<IntVector> rows;
  for (const auto& r : d.induced_rows) rows.push_back(r.row);
  return MonoidPresentation::from_rows(d.rank(), rows);
}

/// Minimal generators of M(G).
inline MonoidPresentation hilbert_basis(const GroupCharData& d) { return minimal_generators(monoid_of(d)); }

}  // namespace mca
