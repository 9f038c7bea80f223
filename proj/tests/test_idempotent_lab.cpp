#include <doctest.h>

#include <functional>
#include <random>

#include "jmotive/error.hpp"
#include "jmotive/idempotent_lab.hpp"

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

using Rows = std::vector<std::vector<std::int64_t>>;

ModMatrix random_matrix(std::int64_t m, int l, std::mt19937_64& rng) {
  ModMatrix a(m, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) a.set(i, j, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)));
  return a;
}

// Product of random transvections together with its inverse.
std::pair<ModMatrix, ModMatrix> random_unimodular(std::int64_t m, int l, std::mt19937_64& rng) {
  auto u = ModMatrix::identity(m, l), v = ModMatrix::identity(m, l);
  for (int step = 0; step < 3 * l; ++step) {
    const int i = static_cast<int>(rng() % l), j = static_cast<int>(rng() % l);
    if (i == j) continue;
    const auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    auto e = ModMatrix::identity(m, l), f = ModMatrix::identity(m, l);
    e.set(i, j, c);
    f.set(i, j, (m - c) % m);
    u = u * e;
    v = f * v;
  }
  return {u, v};
}

ModMatrix diag(std::int64_t m, const std::vector<std::int64_t>& d) {
  ModMatrix a(m, static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) a.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return a;
}

ModMatrix embed(const ModMatrix& a, std::int64_t m) {
  return ModMatrix(m, a.rows());
}

// Cofactor expansion, independent of the library's elimination.
BigInt cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const BigInt term = a[0][c] * cofactor_det(minor);
    s += c % 2 ? BigInt(-term) : term;
  }
  return s;
}

bool reduces_to(const IntMatrix& a, const ModMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      BigInt r = a[i][j] % m.modulus();
      if (r < 0) r += m.modulus();
      if (r != m.at(i, j)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("matrix basics and text form") {
  const ModMatrix a(6, Rows{{7, -1}, {3, 12}});
  CHECK(a.at(0, 0) == 1);
  CHECK(a.at(0, 1) == 5);
  CHECK(a.at(1, 1) == 0);
  CHECK(a.to_text() == "mod 6 size 2\n1,5;3,0");
  CHECK(ModMatrix::parse(a.to_text()) == a);
  CHECK(ModMatrix::identity(4, 3).is_idempotent());
  CHECK((a - a).is_zero());
  CHECK(a.reduce(3) == ModMatrix(3, Rows{{1, 2}, {0, 0}}));
  CHECK(code_of([&] { a.reduce(4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ModMatrix(4, Rows{{1, 2}, {3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)(a * ModMatrix::identity(4, 2)); }) == ErrorCode::ContextMismatch);
  for (auto bad : {"mod 4 size 2\n1,0", "mod 4 size 2\n1,0;0,x", "size 2\n1,0;0,1", "mod 4 size 2\n1,0,0;0,1"})
    CHECK(code_of([&] { ModMatrix::parse(bad); }) == ErrorCode::ParseError);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto r = random_matrix(1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<int>(rng() % 4), rng);
    CHECK(ModMatrix::parse(r.to_text()) == r);
  }
}

TEST_CASE("graded endomorphisms") {
  ModMatrix m(4, 3);
  m.set(1, 0, 1);  // slot 0 (degree 0) to slot 1 (degree 2)
  GradedEndo g(m, {0, 2, 5});
  CHECK(g.homogeneous_degree() == -2);
  m.set(2, 1, 1);
  CHECK_FALSE(GradedEndo(m, {0, 2, 5}).homogeneous_degree().has_value());
  CHECK(GradedEndo(ModMatrix(4, 3), {0, 2, 5}).homogeneous_degree() == 0);
  CHECK(code_of([&] { GradedEndo(m, {0, 2}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("idempotent lifting") {
  CHECK(lift_idempotent(ModMatrix::identity(8, 3)) == ModMatrix::identity(8, 3));
  CHECK(lift_idempotent(ModMatrix(8, 3)).is_zero());
  CHECK(code_of([] { lift_idempotent(ModMatrix(4, Rows{{1, 1}, {1, 1}})); }) == ErrorCode::NotAlmostIdempotent);
  CHECK(code_of([] { lift_idempotent(ModMatrix::identity(6, 2)); }) == ErrorCode::InvalidArgument);

  // the idempotents of M_2(Z/2), found by exhaustion
  std::vector<ModMatrix> idem;
  for (int bits = 0; bits < 16; ++bits) {
    const ModMatrix a(2, Rows{{bits & 1, (bits >> 1) & 1}, {(bits >> 2) & 1, (bits >> 3) & 1}});
    if (a * a == a) idem.push_back(a);
  }
  REQUIRE(idem.size() == 8);
  std::mt19937_64 rng(17);
  for (std::int64_t m : {4, 8, 32}) {
    for (const auto& e0 : idem) {
      for (int noise = 0; noise < 4; ++noise) {
        const auto a = embed(e0, m) + random_matrix(m, 2, rng).scaled(2);
        const auto e = lift_idempotent(a);
        CHECK(e * e == e);
        CHECK(e.reduce(2) == e0);
      }
    }
  }
  // odd primes, larger sizes
  for (std::int64_t m : {9, 27, 25, 49}) {
    const std::int64_t p = m % 3 == 0 ? 3 : m % 5 == 0 ? 5 : 7;
    for (int t = 0; t < 20; ++t) {
      const auto [u, v] = random_unimodular(p, 4, rng);
      const auto e0 = u * diag(p, {1, 1, 0, 0}) * v;
      const auto a = embed(e0, m) + random_matrix(m, 4, rng).scaled(p);
      const auto e = lift_idempotent(a);
      CHECK(e.is_idempotent());
      CHECK(e.reduce(p) == e0);
    }
  }
}

TEST_CASE("orthogonal families") {
  const auto i4 = ModMatrix::identity(4, 2);
  const auto one = lift_orthogonal_family({i4});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == i4);
  const std::vector<ModMatrix> split{diag(4, {1, 0}), diag(4, {0, 1})};
  CHECK(lift_orthogonal_family(split) == split);
  CHECK(code_of([] { lift_orthogonal_family({diag(4, {1, 0}), diag(4, {1, 1})}); }) == ErrorCode::NotAFamily);
  CHECK(code_of([] { lift_orthogonal_family({diag(4, {1, 0})}); }) == ErrorCode::NotAFamily);

  std::mt19937_64 rng(23);
  for (std::int64_t m : {8, 4, 9}) {
    const std::int64_t p = m % 2 == 0 ? 2 : 3;
    for (int t = 0; t < 100; ++t) {
      // a random partition of the three coordinates, conjugated
      const auto [u, v] = random_unimodular(p, 3, rng);
      std::vector<int> part(3);
      for (auto& x : part) x = static_cast<int>(rng() % 3);
      std::vector<ModMatrix> family;
      for (int b = 0; b < 3; ++b) {
        std::vector<std::int64_t> d(3);
        for (int i = 0; i < 3; ++i) d[i] = part[i] == b;
        family.push_back(embed(u * diag(p, d) * v, m) + random_matrix(m, 3, rng).scaled(p));
      }
      const auto lifted = lift_orthogonal_family(family);
      REQUIRE(lifted.size() == 3);
      ModMatrix sum(m, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        sum += lifted[i];
        CHECK(lifted[i].is_idempotent());
        CHECK(lifted[i].reduce(p) == family[i].reduce(p));
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) CHECK((lifted[i] * lifted[j]).is_zero());
      }
      CHECK(sum == ModMatrix::identity(m, 3));
    }
  }
}

TEST_CASE("isomorphism lifting") {
  // exact inverses: theta = corner-truncated psi
  const auto e = diag(4, {1, 0});
  const auto exact = lift_isomorphism_izvrat(e, e, e, e);
  CHECK(exact.theta12 == e);
  CHECK(exact.theta21 == e);

  const auto three = diag(4, {3, 0});
  const auto r = lift_isomorphism_izvrat(e, e, three, three);
  CHECK(r.theta21 * r.theta12 == e);
  CHECK(r.theta12 * r.theta21 == e);

  // 1 + 2 over Z/8 needs the correction term
  const auto s = lift_isomorphism_izvrat(diag(8, {1, 0}), diag(8, {1, 0}), diag(8, {3, 0}), diag(8, {1, 0}));
  CHECK(s.theta21 * s.theta12 == diag(8, {1, 0}));
  CHECK(s.theta12 * s.theta21 == diag(8, {1, 0}));
  CHECK(s.nilpotency_order >= 2);

  CHECK(code_of([&] { lift_isomorphism_izvrat(e, e, diag(4, {0, 0}), e); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([&] { lift_isomorphism_izvrat(ModMatrix(4, Rows{{1, 1}, {1, 1}}), e, e, e); }) ==
        ErrorCode::HypothesisViolated);

  std::mt19937_64 rng(31);
  for (std::int64_t m : {8, 16, 27, 25}) {
    const std::int64_t p = m % 2 == 0 ? 2 : m % 3 == 0 ? 3 : 5;
    for (int t = 0; t < 60; ++t) {
      const int l = 2 + static_cast<int>(rng() % 3);
      const auto [w, wi] = random_unimodular(m, l, rng);
      const auto [u, ui] = random_unimodular(m, l, rng);
      std::vector<std::int64_t> d(static_cast<std::size_t>(l), 0);
      d[0] = 1;
      if (l > 2) d[1] = 1;
      const auto phi1 = w * diag(m, d) * wi;
      const auto phi2 = u * phi1 * ui;
      // psi's are inverse modulo p only
      const auto psi12 = phi2 * u * phi1 + random_matrix(m, l, rng).scaled(p);
      const auto psi21 = phi1 * ui * phi2 + random_matrix(m, l, rng).scaled(p);
      const auto out = lift_isomorphism_izvrat(phi1, phi2, psi12, psi21);
      CHECK(out.theta21 * out.theta12 == phi1);
      CHECK(out.theta12 * out.theta21 == phi2);
      CHECK(out.theta12.reduce(p) == (phi2 * psi12 * phi1).reduce(p));
    }
  }
}

TEST_CASE("graded isomorphism lifting") {
  // slots of degree 0 and 1; psi12 raises, psi21 lowers
  ModMatrix p12(8, 2), p21(8, 2);
  p12.set(1, 0, 3);
  p21.set(0, 1, 5);
  const GradedEndo phi1(diag(8, {1, 0}), {0, 1}), phi2(diag(8, {0, 1}), {0, 1});
  const GradedEndo psi12(p12, {0, 1}), psi21(p21, {0, 1});
  const auto [t12, t21] = lift_isomorphism_izvrat(phi1, phi2, psi12, psi21);
  CHECK(t21.matrix * t12.matrix == phi1.matrix);
  CHECK(t12.matrix * t21.matrix == phi2.matrix);
  CHECK(t12.homogeneous_degree() == psi12.homogeneous_degree());
  CHECK(t21.homogeneous_degree() == psi21.homogeneous_degree());

  ModMatrix bad(8, 2);
  bad.set(1, 0, 1);
  const GradedEndo shifted(bad + diag(8, {1, 0}), {0, 1});
  CHECK(code_of([&] { lift_isomorphism_izvrat(shifted, phi2, psi12, psi21); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([&] { lift_isomorphism_izvrat(phi1, phi2, psi12, psi12); }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("CRT splitting") {
  const auto c6 = crt_split(6);
  CHECK(c6.moduli() == std::vector<std::int64_t>{2, 3});
  const auto parts = c6.split(diag(6, {5, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == diag(2, {1, 1}));
  CHECK(parts[1] == diag(3, {2, 1}));
  CHECK(c6.reconstruct(parts) == diag(6, {5, 1}));
  const auto c4 = crt_split(4);
  CHECK(c4.factors == std::vector<std::pair<std::int64_t, int>>{{2, 2}});
  CHECK(code_of([] { crt_split(1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { crt_split(0); }) == ErrorCode::InvalidArgument);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 999);
    const auto c = crt_split(m);
    std::int64_t prod = 1;
    for (auto q : c.moduli()) prod *= q;
    CHECK(prod == m);
    const int l = 1 + static_cast<int>(rng() % 3);
    const auto a = random_matrix(m, l, rng), b = random_matrix(m, l, rng);
    CHECK(c.reconstruct(c.split(a)) == a);
    const auto sa = c.split(a), sb = c.split(b), sab = c.split(a * b), spb = c.split(a + b);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      CHECK(sab[i] == sa[i] * sb[i]);
      CHECK(spb[i] == sa[i] + sb[i]);
    }
  }
}

TEST_CASE("determinants") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix a(n, std::vector<BigInt>(n));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 21) - 10;
    CHECK(determinant(a) == cofactor_det(a));
  }
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("SL lifting") {
  const auto id = sl_lift(ModMatrix::identity(6, 3));
  CHECK(id == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(sl_lift(ModMatrix(6, Rows{{1, 1}, {0, 1}})) == IntMatrix{{1, 1}, {0, 1}});
  CHECK(code_of([] { sl_lift(diag(6, {1, 5})); }) == ErrorCode::DeterminantNotOne);

  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 1000) {
    const auto a = random_matrix(6, 2, rng);
    if ((a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0) - 1) % 6 != 0) continue;
    const auto lift = sl_lift(a);
    CHECK(cofactor_det(lift) == 1);
    CHECK(reduces_to(lift, a));
    ++done;
  }
  for (std::int64_t m : {12, 30, 49, 210}) {
    for (int t = 0; t < 40; ++t) {
      // SL_3 elements with non-unit entries everywhere
      const auto [u, v] = random_unimodular(m, 3, rng);
      (void)v;
      const auto lift = sl_lift(u);
      CHECK(cofactor_det(lift) == 1);
      CHECK(reduces_to(lift, u));
    }
  }
}
