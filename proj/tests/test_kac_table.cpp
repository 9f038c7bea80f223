#include <doctest.h>

#include <numeric>

#include "jmotive/error.hpp"
#include "jmotive/kac_table.hpp"
#include "jmotive/root_data.hpp"

using namespace jmotive;

namespace {

// largest e with den * 2^e <= num, by repeated doubling
int log2_floor(int num, int den) {
  int e = -1;
  for (long long v = den; v <= num; v *= 2) ++e;
  return e;
}

int v2(int n) {
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

TorsionData row(int p, std::vector<int> d, std::vector<int> k) { return TorsionData{p, std::move(d), std::move(k)}; }

}  // namespace

TEST_CASE("torsion primes") {
  CHECK(torsion_primes(GroupForm::parse("F4")) == std::vector<int>{2, 3});
  CHECK(torsion_primes(GroupForm::parse("E8")) == std::vector<int>{2, 3, 5});
  CHECK(torsion_primes(GroupForm::parse("SL3")).empty());
  CHECK(torsion_primes(GroupForm::parse("G2")) == std::vector<int>{2});
  CHECK(torsion_primes(GroupForm::parse("E6ad")) == std::vector<int>{2, 3});
  CHECK(torsion_primes(GroupForm::parse("PGL7")) == std::vector<int>{7});
  CHECK(torsion_primes(GroupForm::parse("SL12/mu6")) == std::vector<int>{2, 3});
  CHECK(torsion_primes(GroupForm::parse("Sp8")).empty());
  CHECK(torsion_primes(GroupForm::parse("Spin5")).empty());
  CHECK(torsion_primes(GroupForm::parse("Spin7")) == std::vector<int>{2});
}

TEST_CASE("fixed rows") {
  CHECK(torsion_data(GroupForm::parse("E8"), 5) == row(5, {6}, {1}));
  CHECK(torsion_data(GroupForm::parse("E8"), 2) == row(2, {3, 5, 9, 15}, {3, 2, 1, 1}));
  CHECK(torsion_data(GroupForm::parse("E8"), 3) == row(3, {4, 10}, {1, 1}));
  CHECK(torsion_data(GroupForm::parse("E8"), 7) == row(7, {}, {}));
  CHECK(torsion_data(GroupForm::parse("Spin7"), 2) == row(2, {3}, {1}));
  CHECK(torsion_data(GroupForm::parse("G2"), 2) == row(2, {3}, {1}));
  CHECK(torsion_data(GroupForm::parse("F4"), 3) == row(3, {4}, {1}));
  CHECK(torsion_data(GroupForm::parse("E6ad"), 3) == row(3, {1, 4}, {2, 1}));
  CHECK(torsion_data(GroupForm::parse("E6sc"), 3) == row(3, {4}, {1}));
  CHECK(torsion_data(GroupForm::parse("E7ad"), 3) == row(3, {4}, {1}));
  CHECK(torsion_data(GroupForm::parse("E7sc"), 2) == row(2, {3, 5, 9}, {1, 1, 1}));
  CHECK(torsion_data(GroupForm::parse("E7ad"), 2) == row(2, {1, 3, 5, 9}, {1, 1, 1, 1}));
  CHECK(torsion_data(GroupForm::parse("PGL8"), 2) == row(2, {1}, {3}));
  CHECK(torsion_data(GroupForm::parse("SL12/mu6"), 3) == row(3, {1}, {1}));
  CHECK(torsion_data(GroupForm::parse("SL12/mu6"), 2) == row(2, {1}, {2}));
  CHECK(torsion_data(GroupForm::parse("PGSp12"), 2) == row(2, {1}, {2}));
  // hand evaluation: SO8 has r = 2, d = (1,3), k = (floor log2 7, floor log2 7/3) = (2,1)
  CHECK(torsion_data(GroupForm::parse("SO8"), 2) == row(2, {1, 3}, {2, 1}));
  // PGO8 (n = 4): r = 3, d = (1,1,3), k = (v2(4), floor log2 7, floor log2 7/3) = (2,2,1)
  CHECK(torsion_data(GroupForm::parse("PGO8"), 2) == row(2, {1, 1, 3}, {2, 2, 1}));
  // HalfSpin8 (n = 4): r = 2, d = (1,3), k = (2,1)
  CHECK(torsion_data(GroupForm::parse("HalfSpin8"), 2) == row(2, {1, 3}, {2, 1}));
  CHECK_THROWS_AS(torsion_data(GroupForm::parse("E8"), 4), Error);
}

TEST_CASE("parametric rows against a second evaluation") {
  for (int n = 5; n <= 40; ++n) {
    CAPTURE(n);
    TorsionData so{2, {}, {}}, spin{2, {}, {}};
    for (int i = 1; 4 * i <= n + 1; ++i) {
      so.d.push_back(2 * i - 1);
      so.k.push_back(log2_floor(n - 1, 2 * i - 1));
    }
    for (int i = 1; 4 * i <= n - 3; ++i) {
      spin.d.push_back(2 * i + 1);
      spin.k.push_back(log2_floor(n - 1, 2 * i + 1));
    }
    CHECK(so_row(n) == so);
    CHECK(spin_row(n) == spin);
  }
  for (int n = 2; n <= 20; ++n) {
    CAPTURE(n);
    TorsionData pgo{2, {1}, {v2(n)}};
    for (int i = 2; 2 * i <= n + 2; ++i) {
      pgo.d.push_back(2 * i - 3);
      pgo.k.push_back(log2_floor(2 * n - 1, 2 * i - 3));
    }
    CHECK(pgo_row(n) == pgo);
    if (n % 2 == 0) {
      TorsionData hs{2, {1}, {v2(n)}};
      for (int i = 2; 2 * i <= n; ++i) {
        hs.d.push_back(2 * i - 1);
        hs.k.push_back(log2_floor(2 * n - 1, 2 * i - 1));
      }
      CHECK(half_spin_row(n) == hs);
    } else {
      CHECK_THROWS_AS(half_spin_row(n), Error);
    }
  }
}

TEST_CASE("constraint rules") {
  using K = ConstraintRule::Kind;
  const auto ge = [](int a, int b) { return ConstraintRule{K::GE, a, b, 0, std::nullopt}; };
  const auto le = [](int a, int b, int o) { return ConstraintRule{K::LE, a, b, o, std::nullopt}; };
  CHECK(constraint_rules(GroupForm::parse("E7sc"), 2) == std::vector<ConstraintRule>{ge(1, 2), ge(2, 3)});
  CHECK(constraint_rules(GroupForm::parse("E7ad"), 2) == std::vector<ConstraintRule>{ge(2, 3), ge(3, 4)});
  CHECK(constraint_rules(GroupForm::parse("E8"), 2) ==
        std::vector<ConstraintRule>{ge(1, 2), ge(2, 3), le(1, 2, 1), le(2, 3, 1)});
  CHECK(constraint_rules(GroupForm::parse("E8"), 3) == std::vector<ConstraintRule>{ge(1, 2)});
  CHECK(constraint_rules(GroupForm::parse("F4"), 3).empty());
  CHECK(constraint_rules(GroupForm::parse("E6ad"), 3).empty());
  CHECK(constraint_rules(GroupForm::parse("E8"), 7).empty());

  // Spin19: r = 4, gates C(i, l); LE j_i <= j_{2i} + 1 for i = 1, 2
  const auto spin = constraint_rules(GroupForm::parse("Spin19"), 2);
  int gates = 0, les = 0;
  for (const auto& r : spin) {
    CHECK(r.lhs >= 1);
    CHECK(r.rhs <= 4);
    if (r.kind == K::GE) {
      REQUIRE(r.gate.has_value());
      CHECK(r.gate->top == r.lhs);
      CHECK(r.gate->bottom == r.rhs - r.lhs);
      ++gates;
    } else {
      CHECK(r.rhs == 2 * r.lhs);
      CHECK(r.offset == 1);
      ++les;
    }
  }
  CHECK(gates == 6);
  CHECK(les == 2);
  CHECK(spin.front().to_string() == "j1 >= j2 if C(1,1) != 0");

  // SO rows gate with C(i-1, l) and bound j_i by j_{2i-1} + 1
  for (const auto& r : constraint_rules(GroupForm::parse("SO17"), 2)) {
    if (r.kind == K::GE)
      CHECK(r.gate->top == r.lhs - 1);
    else
      CHECK(r.rhs == 2 * r.lhs - 1);
  }
  // PGO rows start at i = 2 with C(i-2, l) and j_i <= j_{2i-2} + 1
  for (const auto& r : constraint_rules(GroupForm::parse("PGO16"), 2)) {
    CHECK(r.lhs >= 2);
    if (r.kind == K::GE)
      CHECK(r.gate->top == r.lhs - 2);
    else
      CHECK(r.rhs == 2 * r.lhs - 2);
  }
}

TEST_CASE("table-wide invariants") {
  for (const auto& row : expanded_table(12)) {
    CAPTURE(row.form.name());
    CAPTURE(row.data.p);
    const auto& t = row.data;
    REQUIRE(t.r() >= 1);
    CHECK_NOTHROW(t.validate());
    const auto deg = weyl_degrees(row.form.base());
    const int max_degree = *std::max_element(deg.begin(), deg.end());
    for (int i = 0; i < t.r(); ++i) {
      CHECK(std::gcd(t.d[i], t.p) == 1);
      std::int64_t top = t.d[i];
      for (int e = 0; e < t.k[i]; ++e) top *= t.p;
      CHECK(top <= max_degree);
      CHECK(t.k[i] >= 0);
    }
    CHECK(t.d[0] * t.p >= 2);
    const auto iso = row.form.isogeny();
    if (iso == Isogeny::SO || iso == Isogeny::Spin || iso == Isogeny::HalfSpin)
      CHECK(std::adjacent_find(t.d.begin(), t.d.end(), std::greater_equal<int>()) == t.d.end());
    if (iso == Isogeny::PGO)
      // the first two codimensions coincide; strict from the second on
      CHECK(std::adjacent_find(t.d.begin() + 1, t.d.end(), std::greater_equal<int>()) == t.d.end());
    for (const auto& r : row.rules) {
      CHECK(r.lhs >= 1);
      CHECK(r.lhs <= t.r());
      CHECK(r.rhs >= 1);
      CHECK(r.rhs <= t.r());
    }
    // determinism
    CHECK(torsion_data(row.form, t.p) == t);
  }
}

TEST_CASE("supported forms") {
  const auto forms = supported_forms(8);
  CHECK(std::count_if(forms.begin(), forms.end(), [](const GroupForm& f) { return f.base().series() == Series::E; }) == 5);
  for (const auto& f : forms) CHECK(GroupForm::parse(f.name()) == f);
}
