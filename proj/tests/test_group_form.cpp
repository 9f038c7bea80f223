#include <doctest.h>

#include <functional>

#include "jmotive/error.hpp"
#include "jmotive/group_form.hpp"
#include "jmotive/kac_table.hpp"

using namespace jmotive;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("parse and canonical names") {
  for (const char* name : {"SL4", "PGL4", "SL6/mu2", "SL6/mu3", "Sp6", "PGSp6", "SO7", "Spin7", "SO8", "Spin8", "PGO8",
                           "HalfSpin8", "G2", "F4", "E6sc", "E6ad", "E7sc", "E7ad", "E8"}) {
    CAPTURE(name);
    CHECK(GroupForm::parse(name).name() == name);
  }
  CHECK(GroupForm::parse("A3ad").name() == "PGL4");
  CHECK(GroupForm::parse("SL4/mu4").name() == "PGL4");
  CHECK(GroupForm::parse("E8sc") == GroupForm::parse("E8"));
  CHECK(GroupForm::parse("B3ad").name() == "SO7");
  CHECK(GroupForm::parse("D5sc").name() == "Spin10");
  CHECK(GroupForm::parse("C3ad").name() == "PGSp6");
  // D3 collapses onto A3
  CHECK(GroupForm::parse("Spin6").name() == "SL4");
  CHECK(GroupForm::parse("SO6").name() == "SL4/mu2");
  CHECK(GroupForm::parse("PGO6").name() == "PGL4");
  CHECK(GroupForm::parse("SO7").matrix_size() == 7);
  CHECK(GroupForm::parse("SL6/mu3").mu() == 3);
}

TEST_CASE("illegal forms") {
  CHECK(code_of([] { GroupForm::parse("E6"); }) == ErrorCode::UnsupportedForm);
  CHECK(code_of([] { GroupForm::parse("SO4"); }) == ErrorCode::UnsupportedForm);
  CHECK(code_of([] { GroupForm::parse("SL6/mu4"); }) == ErrorCode::UnsupportedForm);
  CHECK(code_of([] { GroupForm::parse("HalfSpin10"); }) == ErrorCode::UnsupportedForm);
  CHECK(code_of([] { GroupForm(DynkinType(Series::B, 3), Isogeny::PGSp); }) == ErrorCode::UnsupportedForm);
  CHECK(GroupForm(DynkinType(Series::G, 2), Isogeny::Adjoint) == GroupForm::parse("G2"));
  CHECK(code_of([] { GroupForm::parse("XY7"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { GroupForm::parse("Spinach"); }) == ErrorCode::ParseError);
}

TEST_CASE("generic splitness table") {
  const auto g2 = GroupForm::parse("G2");
  CHECK(is_generically_split(g2, ParabolicSubset(g2.base(), {1}), 1, 2) == Splitness::Split);
  CHECK(is_generically_split(g2, ParabolicSubset::full(g2.base()), 1, 2) == Splitness::NotSplit);

  const auto a4 = GroupForm::parse("PGL5");
  CHECK(is_generically_split(a4, ParabolicSubset(a4.base(), {2, 3, 4}), 5, 5) == Splitness::Split);
  // gcd(k, 6) = 1 fails for k = 2, 3, 4
  const auto a5 = GroupForm::parse("PGL6");
  CHECK(is_generically_split(a5, ParabolicSubset::complement_of(a5.base(), {2, 3, 4}), 6, 6) == Splitness::NotSplit);
  CHECK(is_generically_split(a5, ParabolicSubset::complement_of(a5.base(), {5}), 6, 6) == Splitness::Split);

  const auto e8 = GroupForm::parse("E8");
  CHECK(is_generically_split(e8, ParabolicSubset::complement_of(e8.base(), {7}), 1, 8) == Splitness::NotSplit);
  CHECK(is_generically_split(e8, ParabolicSubset::complement_of(e8.base(), {7}), 1, 5) == Splitness::Split);
  CHECK(is_generically_split(e8, ParabolicSubset::complement_of(e8.base(), {4}), 1, 8) == Splitness::Split);

  const auto e6 = GroupForm::parse("E6sc");
  const auto p1 = ParabolicSubset::complement_of(e6.base(), {1});
  CHECK(is_generically_split(e6, p1, 1, 3) == Splitness::Split);
  CHECK(is_generically_split(e6, p1, 1, 2) == Splitness::NotSplit);
  const auto p2 = ParabolicSubset::complement_of(e6.base(), {2});
  CHECK(is_generically_split(e6, p2, 1, 2) == Splitness::Split);
  CHECK(is_generically_split(e6, p2, 3, 2) == Splitness::NotSplit);

  const auto e7 = GroupForm::parse("E7sc");
  const auto p7 = ParabolicSubset::complement_of(e7.base(), {7});
  const auto p1e7 = ParabolicSubset::complement_of(e7.base(), {1});
  CHECK(is_generically_split(e7, p7, 1, 3) == Splitness::NotSplit);
  CHECK(is_generically_split(e7, p1e7, 1, 3) == Splitness::Split);
  CHECK(is_generically_split(e7, p1e7, 1, 2) == Splitness::NotSplit);

  const auto f4 = GroupForm::parse("F4");
  const auto p4 = ParabolicSubset::complement_of(f4.base(), {4});
  CHECK(is_generically_split(f4, p4, 1, 2) == Splitness::NotSplit);
  CHECK(is_generically_split(f4, p4, 1, 3) == Splitness::Split);

  const auto sp = GroupForm::parse("PGSp8");
  CHECK(is_generically_split(sp, ParabolicSubset::complement_of(sp.base(), {2, 4}), 2, 2) == Splitness::NotSplit);
  CHECK(is_generically_split(sp, ParabolicSubset::complement_of(sp.base(), {3}), 2, 2) == Splitness::Split);

  // orthogonal rows defer to the caller outside the numeric clauses
  const auto so9 = GroupForm::parse("SO9");
  const auto q1 = ParabolicSubset::complement_of(so9.base(), {1});
  CHECK(is_generically_split(so9, q1, 1, 2) == Splitness::Unknown);
  CHECK(is_generically_split(so9, q1, 1, 2, true) == Splitness::Split);
  CHECK(is_generically_split(so9, q1, 1, 2, false) == Splitness::NotSplit);
  CHECK(is_generically_split(so9, ParabolicSubset::complement_of(so9.base(), {4}), 1, 2) == Splitness::Split);
  const auto so10 = GroupForm::parse("SO10");
  CHECK(is_generically_split(so10, ParabolicSubset::complement_of(so10.base(), {4}), 1, 2) == Splitness::Split);
  CHECK(is_generically_split(so10, ParabolicSubset::complement_of(so10.base(), {4}), 2, 2) == Splitness::Unknown);
  // Θ = 𝒟: nothing to test, never split
  CHECK(is_generically_split(so10, ParabolicSubset::full(so10.base()), 1, 2) == Splitness::NotSplit);

  CHECK_THROWS_AS(is_generically_split(g2, ParabolicSubset(g2.base(), {}), 0, 1), Error);
  CHECK(to_string(Splitness::Unknown) == "unknown");
}
