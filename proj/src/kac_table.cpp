#include "jmotive/kac_table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jmotive/arith.hpp"
#include "jmotive/error.hpp"

namespace jmotive {

int TorsionData::k_sum() const { return std::accumulate(k.begin(), k.end(), 0); }

void TorsionData::validate() const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (d.size() != k.size()) throw Error(ErrorCode::LengthMismatch, "d and k differ in length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || d[i] % p == 0)
      throw Error(ErrorCode::InvalidArgument, "codimension " + std::to_string(d[i]) + " is not coprime to p");
    if (k[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation exponent");
    if (i > 0 && d[i] < d[i - 1]) throw Error(ErrorCode::InvalidArgument, "codimensions must be nondecreasing");
  }
}

std::string ConstraintRule::to_string() const {
  std::ostringstream os;
  if (kind == Kind::GE) {
    os << "j" << lhs << " >= j" << rhs;
    if (gate) os << " if C(" << gate->top << "," << gate->bottom << ") != 0";
  } else {
    os << "j" << lhs << " <= j" << rhs;
    if (offset != 0) os << " + " << offset;
  }
  return os.str();
}

TorsionData so_row(int n) {
  TorsionData t;
  t.p = 2;
  for (int i = 1; i <= (n + 1) / 4; ++i) {
    t.d.push_back(2 * i - 1);
    t.k.push_back(floor_log2_ratio(n - 1, 2 * i - 1));
  }
  return t;
}

TorsionData spin_row(int n) {
  TorsionData t;
  t.p = 2;
  for (int i = 1; i <= (n - 3) / 4; ++i) {
    t.d.push_back(2 * i + 1);
    t.k.push_back(floor_log2_ratio(n - 1, 2 * i + 1));
  }
  return t;
}

TorsionData pgo_row(int n) {
  TorsionData t;
  t.p = 2;
  const int r = (n + 2) / 2;
  for (int i = 1; i <= r; ++i) {
    if (i == 1) {
      t.d.push_back(1);
      t.k.push_back(p_adic_valuation(n, 2));
    } else {
      t.d.push_back(2 * i - 3);
      t.k.push_back(floor_log2_ratio(2 * n - 1, 2 * i - 3));
    }
  }
  return t;
}

TorsionData half_spin_row(int n) {
  if (n % 2 != 0) throw Error(ErrorCode::UnsupportedForm, "half-spin row needs an even n");
  TorsionData t;
  t.p = 2;
  for (int i = 1; i <= n / 2; ++i) {
    if (i == 1) {
      t.d.push_back(1);
      t.k.push_back(p_adic_valuation(n, 2));
    } else {
      t.d.push_back(2 * i - 1);
      t.k.push_back(floor_log2_ratio(2 * n - 1, 2 * i - 1));
    }
  }
  return t;
}

namespace {

TorsionData fixed(int p, std::vector<int> d, std::vector<int> k) { return TorsionData{p, std::move(d), std::move(k)}; }

// Row data for a torsion prime of the form, or r = 0 data.
TorsionData lookup(const GroupForm& form, int p) {
  const DynkinType& t = form.base();
  const int n = t.rank();
  const int size = form.matrix_size();
  TorsionData none{p, {}, {}};
  switch (t.series()) {
    case Series::A:
      if (form.mu() % p != 0) return none;
      return fixed(p, {1}, {p_adic_valuation(size, p)});
    case Series::B:
    case Series::D:
      if (p != 2) return none;
      switch (form.isogeny()) {
        case Isogeny::SO: return so_row(size);
        case Isogeny::Spin: return spin_row(size);
        case Isogeny::PGO: return pgo_row(n);
        case Isogeny::HalfSpin: return half_spin_row(n);
        default: return none;
      }
    case Series::C:
      if (p != 2 || form.isogeny() != Isogeny::PGSp) return none;
      return fixed(2, {1}, {p_adic_valuation(size, 2)});
    case Series::G:
      return p == 2 ? fixed(2, {3}, {1}) : none;
    case Series::F:
      if (p == 2) return fixed(2, {3}, {1});
      if (p == 3) return fixed(3, {4}, {1});
      return none;
    case Series::E: {
      const bool ad = form.isogeny() == Isogeny::Adjoint;
      if (n == 6) {
        if (p == 2) return fixed(2, {3}, {1});
        if (p == 3) return ad ? fixed(3, {1, 4}, {2, 1}) : fixed(3, {4}, {1});
        return none;
      }
      if (n == 7) {
        if (p == 2) return ad ? fixed(2, {1, 3, 5, 9}, {1, 1, 1, 1}) : fixed(2, {3, 5, 9}, {1, 1, 1});
        if (p == 3) return fixed(3, {4}, {1});
        return none;
      }
      if (p == 2) return fixed(2, {3, 5, 9, 15}, {3, 2, 1, 1});
      if (p == 3) return fixed(3, {4, 10}, {1, 1});
      if (p == 5) return fixed(5, {6}, {1});
      return none;
    }
  }
  return none;
}

ConstraintRule ge(int i, int j, std::optional<BinomialGate> gate = std::nullopt) {
  return ConstraintRule{ConstraintRule::Kind::GE, i, j, 0, gate};
}

ConstraintRule le(int i, int j, int offset) { return ConstraintRule{ConstraintRule::Kind::LE, i, j, offset, std::nullopt}; }

// j_i >= j_{i+l} if p does not divide C(i - shift, l), for i >= first;
// j_i <= j_{2i - lshift} + 1 whenever that index is a different generator.
std::vector<ConstraintRule> orthogonal_rules(int r, int first, int shift, int lshift) {
  std::vector<ConstraintRule> rules;
  for (int i = first; i <= r; ++i)
    for (int l = 1; i + l <= r; ++l) rules.push_back(ge(i, i + l, BinomialGate{i - shift, l}));
  for (int i = first; i <= r; ++i) {
    const int target = 2 * i - lshift;
    if (target != i && target >= 1 && target <= r) rules.push_back(le(i, target, 1));
  }
  return rules;
}

}  // namespace

std::vector<int> torsion_primes(const GroupForm& form) {
  std::vector<int> out;
  for (int p : {2, 3, 5}) {
    if (lookup(form, p).r() > 0) out.push_back(p);
  }
  if (form.base().series() == Series::A)
    for (auto q : prime_divisors(form.mu()))
      if (q > 5) out.push_back(static_cast<int>(q));
  return out;
}

TorsionData torsion_data(const GroupForm& form, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  TorsionData t = lookup(form, p);
  t.validate();
  return t;
}

std::vector<ConstraintRule> constraint_rules(const GroupForm& form, int p) {
  const TorsionData t = torsion_data(form, p);
  const int r = t.r();
  if (r == 0) return {};
  const DynkinType& base = form.base();
  switch (base.series()) {
    case Series::B:
    case Series::D:
      switch (form.isogeny()) {
        case Isogeny::SO: return orthogonal_rules(r, 1, 1, 1);
        case Isogeny::Spin: return orthogonal_rules(r, 1, 0, 0);
        case Isogeny::PGO: return orthogonal_rules(r, 2, 2, 2);
        case Isogeny::HalfSpin: return orthogonal_rules(r, 1, 1, 1);
        default: return {};
      }
    case Series::E:
      if (base.rank() == 7 && p == 2) {
        if (form.isogeny() == Isogeny::Adjoint) return {ge(2, 3), ge(3, 4)};
        return {ge(1, 2), ge(2, 3)};
      }
      if (base.rank() == 8 && p == 2) return {ge(1, 2), ge(2, 3), le(1, 2, 1), le(2, 3, 1)};
      if (base.rank() == 8 && p == 3) return {ge(1, 2)};
      return {};
    default:
      return {};
  }
}

std::vector<GroupForm> supported_forms(int max_classical_rank) {
  std::vector<GroupForm> forms;
  for (int n = 1; n <= max_classical_rank; ++n)
    for (int m = 1; m <= n + 1; ++m)
      if ((n + 1) % m == 0) forms.emplace_back(DynkinType(Series::A, n), Isogeny::SLmodMu, m);
  for (int n = 2; n <= max_classical_rank; ++n) {
    forms.emplace_back(DynkinType(Series::B, n), Isogeny::Spin);
    forms.emplace_back(DynkinType(Series::B, n), Isogeny::SO);
  }
  for (int n = 2; n <= max_classical_rank; ++n) {
    forms.emplace_back(DynkinType(Series::C, n), Isogeny::SimplyConnected);
    forms.emplace_back(DynkinType(Series::C, n), Isogeny::PGSp);
  }
  for (int n = 4; n <= max_classical_rank; ++n) {
    forms.emplace_back(DynkinType(Series::D, n), Isogeny::Spin);
    forms.emplace_back(DynkinType(Series::D, n), Isogeny::SO);
    forms.emplace_back(DynkinType(Series::D, n), Isogeny::PGO);
    if (n % 2 == 0) forms.emplace_back(DynkinType(Series::D, n), Isogeny::HalfSpin);
  }
  forms.emplace_back(DynkinType(Series::G, 2), Isogeny::SimplyConnected);
  forms.emplace_back(DynkinType(Series::F, 4), Isogeny::SimplyConnected);
  forms.emplace_back(DynkinType(Series::E, 6), Isogeny::SimplyConnected);
  forms.emplace_back(DynkinType(Series::E, 6), Isogeny::Adjoint);
  forms.emplace_back(DynkinType(Series::E, 7), Isogeny::SimplyConnected);
  forms.emplace_back(DynkinType(Series::E, 7), Isogeny::Adjoint);
  forms.emplace_back(DynkinType(Series::E, 8), Isogeny::SimplyConnected);
  return forms;
}

std::vector<TableRow> expanded_table(int max_classical_rank) {
  std::vector<TableRow> rows;
  for (const auto& form : supported_forms(max_classical_rank))
    for (int p : torsion_primes(form)) rows.push_back(TableRow{form, torsion_data(form, p), constraint_rules(form, p)});
  return rows;
}

}  // namespace jmotive
