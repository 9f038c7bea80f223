#include "jmotive/json_io.hpp"

#include "jmotive/error.hpp"

namespace jmotive {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Poly& p) { return Json(p.coeffs()); }

Poly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] { return Poly(j.get<std::vector<std::int64_t>>()); });
}

Json to_json(const ConstraintRule& rule) {
  Json j{{"kind", rule.kind == ConstraintRule::Kind::GE ? "ge" : "le"},
         {"lhs", rule.lhs},
         {"rhs", rule.rhs},
         {"offset", rule.offset},
         {"text", rule.to_string()}};
  j["gate"] = rule.gate ? Json{{"top", rule.gate->top}, {"bottom", rule.gate->bottom}} : Json(nullptr);
  return j;
}

ConstraintRule rule_from_json(const Json& j) {
  return guarded("rule", [&] {
    ConstraintRule r;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "ge" && kind != "le") throw Error(ErrorCode::ParseError, "rule kind '" + kind + "'");
    r.kind = kind == "ge" ? ConstraintRule::Kind::GE : ConstraintRule::Kind::LE;
    r.lhs = j.at("lhs").get<int>();
    r.rhs = j.at("rhs").get<int>();
    r.offset = j.value("offset", 0);
    if (j.contains("gate") && !j.at("gate").is_null())
      r.gate = BinomialGate{j.at("gate").at("top").get<int>(), j.at("gate").at("bottom").get<int>()};
    return r;
  });
}

Json to_json(const TableRow& row) {
  Json rules = Json::array();
  for (const auto& r : row.rules) rules.push_back(to_json(r));
  return Json{{"form", row.form.name()}, {"p", row.data.p}, {"r", row.data.r()},
              {"d", row.data.d},         {"k", row.data.k}, {"rules", rules}};
}

TableRow table_row_from_json(const Json& j) {
  return guarded("table row", [&] {
    TorsionData data{j.at("p").get<int>(), j.at("d").get<std::vector<int>>(), j.at("k").get<std::vector<int>>()};
    data.validate();
    if (j.contains("r") && j.at("r").get<int>() != data.r()) throw Error(ErrorCode::LengthMismatch, "r disagrees with d");
    std::vector<ConstraintRule> rules;
    for (const auto& r : j.at("rules")) rules.push_back(rule_from_json(r));
    return TableRow{GroupForm::parse(j.at("form").get<std::string>()), std::move(data), std::move(rules)};
  });
}

Json to_json(const JInvariant& j) { return Json{{"p", j.data().p}, {"j", j.values()}}; }

JInvariant jinvariant_from_json(const Json& j, const TorsionData& data) {
  return guarded("J-invariant", [&] {
    if (j.at("p").get<int>() != data.p) throw Error(ErrorCode::ContextMismatch, "prime disagrees with the row");
    return JInvariant(data, j.at("j").get<std::vector<int>>());
  });
}

Json to_json(const MotiveDecomposition& m) {
  return Json{{"summand", to_json(m.summand)}, {"multiplicities", to_json(m.multiplicities)}, {"total", to_json(m.total)}};
}

MotiveDecomposition decomposition_from_json(const Json& j) {
  return guarded("decomposition", [&] {
    return MotiveDecomposition{poly_from_json(j.at("summand")), poly_from_json(j.at("multiplicities")),
                               poly_from_json(j.at("total"))};
  });
}

Json to_json(const ModMatrix& a) { return Json{{"modulus", a.modulus()}, {"rows", a.rows()}}; }

ModMatrix mod_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    return ModMatrix(j.at("modulus").get<std::int64_t>(), j.at("rows").get<std::vector<std::vector<std::int64_t>>>());
  });
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  return guarded("integer", [&] {
    if (j.is_string()) {
      try {
        return BigInt(j.get<std::string>());
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad integer string");
      }
    }
    return BigInt(j.get<std::int64_t>());
  });
}

Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  return guarded("integer matrix", [&] {
    IntMatrix out;
    for (const auto& r : j) {
      std::vector<BigInt> row;
      for (const auto& v : r) row.push_back(bigint_from_json(v));
      out.push_back(std::move(row));
    }
    return out;
  });
}

}  // namespace jmotive
