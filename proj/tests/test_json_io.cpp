#include <doctest.h>

#include <functional>

#include "jmotive/error.hpp"
#include "jmotive/jinvariant.hpp"
#include "jmotive/json_io.hpp"

using namespace jmotive;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("documented shapes") {
  const auto e7 = GroupForm::parse("E7sc");
  const auto t = torsion_data(e7, 2);
  CHECK(to_json(JInvariant(t, {1, 1, 0})) == Json::parse(R"({"p": 2, "j": [1,1,0]})"));
  CHECK(to_json(Poly{1, 0, 0, 1}) == Json::parse("[1,0,0,1]"));
  CHECK(to_json(Poly{}) == Json::array());
  const MotiveDecomposition m{Poly{1, 1}, Poly{1}, Poly{1, 1}};
  CHECK(to_json(m) == Json::parse(R"({"summand": [1,1], "multiplicities": [1], "total": [1,1]})"));
  const ModMatrix a(4, std::vector<std::vector<std::int64_t>>{{1, 2}, {3, 0}});
  CHECK(to_json(a) == Json::parse(R"({"modulus": 4, "rows": [[1,2],[3,0]]})"));
}

TEST_CASE("round trips") {
  for (const auto& row : expanded_table(8)) {
    CAPTURE(row.form.name());
    const auto j = to_json(row);
    const auto back = table_row_from_json(Json::parse(j.dump()));
    CHECK(back.form == row.form);
    CHECK(back.data == row.data);
    CHECK(back.rules == row.rules);
    for (const auto& r : row.rules) CHECK(rule_from_json(to_json(r)) == r);
    for (const auto& jv : enumerate_admissible(row.form, row.data.p))
      CHECK(jinvariant_from_json(to_json(jv), row.data) == jv);
  }
  const MotiveDecomposition m{Poly{1, 0, 0, 1}, Poly{1, 2, 3}, Poly{1, 0, 0, 1} * Poly{1, 2, 3}};
  CHECK(decomposition_from_json(to_json(m)) == m);
  const ModMatrix a(9, std::vector<std::vector<std::int64_t>>{{1, 2, 3}, {4, 5, 6}, {7, 8, 0}});
  CHECK(mod_matrix_from_json(to_json(a)) == a);

  const BigInt huge = BigInt(1) << 100;
  CHECK(to_json(huge).is_string());
  CHECK(to_json(BigInt(-5)) == Json(-5));
  CHECK(bigint_from_json(to_json(huge)) == huge);
  CHECK(bigint_from_json(to_json(-huge)) == -huge);
  const IntMatrix im{{huge, 1}, {-3, 0}};
  CHECK(int_matrix_from_json(to_json(im)) == im);
}

TEST_CASE("malformed documents") {
  const TorsionData t{2, {3}, {1}};
  CHECK(code_of([] { poly_from_json(Json::parse(R"({"a":1})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { poly_from_json(Json::parse(R"([1,"x"])")); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { jinvariant_from_json(Json::parse(R"({"p":3,"j":[1]})"), t); }) == ErrorCode::ContextMismatch);
  CHECK(code_of([&] { jinvariant_from_json(Json::parse(R"({"j":[1]})"), t); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rule_from_json(Json::parse(R"({"kind":"eq","lhs":1,"rhs":2})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { mod_matrix_from_json(Json::parse(R"({"modulus":4,"rows":[[1,2],[3]]})")); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { bigint_from_json(Json::parse(R"("12a")")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { table_row_from_json(Json::parse(R"({"form":"X9","p":2})")); }) == ErrorCode::ParseError);
}
