#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace mca {
namespace {

using test::cv;
using test::ints;

const char* kTiny = R"({
  "schema_version": 1,
  "group": {"name": "C2", "order": 2},
  "irr": [{"label": "X.1", "degree": 1}, {"label": "X.2", "degree": 1}],
  "induced_rows": [
    {"subgroup_order": 2, "count": 1, "row": [1, 0]},
    {"subgroup_order": 1, "count": 1, "row": [1, 1]}
  ]
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  EXPECT_NE(at, std::string::npos);
  return text.replace(at, from.size(), to);
}

ErrorKind kind_of(const std::string& text, std::string* message = nullptr) {
  try {
    parse_dataset(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "parse succeeded";
  return ErrorKind::InvariantViolation;
}

TEST(Dataset, ParsesMinimalFile) {
  auto d = parse_dataset(kTiny);
  EXPECT_EQ(d.name, "C2");
  EXPECT_EQ(d.order, 2);
  EXPECT_EQ(d.degrees(), ints({1, 1}));
  EXPECT_EQ(hilbert_basis(d), test::monoid(2, {{1, 0}, {1, 1}}));
  EXPECT_FALSE(d.char_values);
}

TEST(Dataset, RejectsMalformedInput) {
  std::string msg;
  EXPECT_EQ(kind_of(with(kTiny, "[1, 1]", "[1, 1, 0]"), &msg), ErrorKind::SchemaError);
  EXPECT_NE(msg.find("induced row"), std::string::npos);
  EXPECT_EQ(kind_of(with(with(kTiny, "\"degree\": 1}, {", "\"degree\": 2}, {"), "\"order\": 2", "\"order\": 6"),
                    &msg),
            ErrorKind::InvariantViolation);
  EXPECT_NE(msg.find("trivial character first"), std::string::npos);
  EXPECT_EQ(kind_of(with(kTiny, "\"schema_version\": 1", "\"schema_version\": 2")), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of("{"), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of(with(kTiny, "[1, 0]", "[0, 1]")), ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of(with(kTiny, "[1, 1]", "[1, -1]")), ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of(with(kTiny, "\"subgroup_order\": 1", "\"subgroup_order\": 2")), ErrorKind::InvariantViolation);
  EXPECT_THROW(load_dataset(test::data_path("missing.json")), Error);
}

TEST(Dataset, AcceptsIntegersWrittenAsStrings) {
  auto d = parse_dataset(with(kTiny, "\"order\": 2", "\"order\": \"2\""));
  EXPECT_EQ(d.order, 2);
}

TEST(Dataset, EveryBundledFileRoundTrips) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    EXPECT_EQ(parse_dataset(serialize_dataset(d).dump()), d) << name;
  }
}

TEST(Dataset, QuotientAnnotations) {
  auto& d = test::dataset("sl23.json");
  ASSERT_EQ(d.quotients.size(), 2u);
  EXPECT_EQ(d.quotients[0].name, "A4");
  EXPECT_EQ(d.quotients[0].kernel_indices, (std::vector<std::size_t>{1, 2, 3, 7}));
}

TEST(Cyclotomic, ZeroTesting) {
  auto phi3 = cyclo::cyclotomic_polynomial(3);
  EXPECT_EQ(phi3, (cyclo::Poly{1, 1, 1}));
  EXPECT_TRUE(cyclo::is_zero(ints({1, 1, 1}), phi3));
  EXPECT_FALSE(cyclo::is_zero(ints({1, 1, 0}), phi3));
  EXPECT_EQ(cyclo::cyclotomic_polynomial(4), (cyclo::Poly{1, 0, 1}));
  EXPECT_THROW(cyclo::cyclotomic_polynomial(0), Error);
}

TEST(Render, Monomials) {
  EXPECT_EQ(render_monomial(cv({0, 1, 1, 1, 2, 2, 2})), "x2x3x4x5^2x6^2x7^2");
  EXPECT_EQ(render_monomial(cv({0, 0})), "1");
  EXPECT_EQ(render_monomial(cv({1, 0, 3}), "F"), "F1F3^3");
}

TEST(Render, MonomialsAreInjective) {
  std::set<std::string> seen;
  for (long a = 0; a < 12; ++a)
    for (long b = 0; b < 12; ++b)
      for (long c = 0; c < 12; ++c) EXPECT_TRUE(seen.insert(render_monomial(ints({a, b, c}))).second);
}

TEST(Render, TableLayout) {
  Report r;
  r["almost_monomial"] = true;
  r["factorial"] = false;
  r["alpha"] = nullptr;
  r["shape"] = {1, 2};
  r["empty"] = Report::array();
  r["relations"] = {"t1 - t2"};
  r["items"] = {{{"name", "a"}, {"holds", true}}};
  EXPECT_EQ(render_table(r),
            "almost monomial: yes\n"
            "factorial: no\n"
            "alpha: none\n"
            "shape: (1, 2)\n"
            "empty: none\n"
            "relations:\n"
            "  t1 - t2\n"
            "items:\n"
            "  - name: a\n"
            "    holds: yes\n");
}

TEST(Render, EmitReport) {
  Report a;
  a["x"] = 1;
  Report b;
  b["x"] = 2;
  EXPECT_EQ(emit_report("demo", {a, b}, ReportFormat::Table), "x: 1\n\nx: 2\n");
  auto doc = nlohmann::json::parse(emit_report("demo", {a, b}, ReportFormat::Json));
  EXPECT_EQ(doc["command"], "demo");
  EXPECT_EQ(doc["reports"].size(), 2u);
  EXPECT_EQ(emit_report("demo", {}, ReportFormat::Table), "");
}

}  // namespace
}  // namespace mca
