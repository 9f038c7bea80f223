#include "jmotive/motive.hpp"

#include <algorithm>
#include <functional>

#include "jmotive/error.hpp"
#include "jmotive/kac_table.hpp"

namespace jmotive {

namespace {

void require_same_row(const TorsionData& data, const JInvariant& j) {
  if (!(data == j.data())) throw Error(ErrorCode::ContextMismatch, "J was built for different torsion data");
}

Poly power(const Poly& base, int e) {
  Poly out = Poly::constant(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

Poly from_factorization(const std::map<int, int>& exps) {
  Poly out = Poly::constant(1);
  for (auto [n, e] : exps) out = out * power(cyclotomic(n), e);
  return out;
}

int cyclotomic_degree(int n) {
  int phi = n;
  for (auto [q, e] : factorize(n)) phi = phi / static_cast<int>(q) * static_cast<int>(q - 1);
  return phi;
}

}  // namespace

Poly rost_poincare(const TorsionData& data, const JInvariant& j) {
  require_same_row(data, j);
  Poly out = Poly::constant(1);
  for (int i = 0; i < data.r(); ++i) {
    const auto di = data.d[static_cast<std::size_t>(i)];
    const std::int64_t top = checked_mul(di, ipow(data.p, j[i + 1]));
    out = out * Poly::ratio(static_cast<int>(top), di);
  }
  return out;
}

MotiveDecomposition decompose(const GroupForm& form, int p, const JInvariant& j, const ParabolicSubset& theta) {
  const TorsionData data = torsion_data(form, p);
  require_same_row(data, j);
  MotiveDecomposition out;
  out.total = poincare_homogeneous(form.base(), theta);
  out.summand = rost_poincare(data, j);
  auto q = divide_exact(out.total, out.summand);
  if (!q)
    throw Error(ErrorCode::NotDivisible, out.summand.to_string() + " does not divide the Poincaré polynomial of X_Θ for " +
                                             form.name() + ", J = " + j.to_string());
  if (!q->has_nonnegative_coefficients())
    throw Error(ErrorCode::NegativeCoefficient, "negative multiplicity in " + q->to_string());
  out.multiplicities = std::move(*q);
  return out;
}

std::int64_t canonical_p_dimension(const TorsionData& data, const JInvariant& j) {
  require_same_row(data, j);
  std::int64_t s = 0;
  for (int i = 0; i < data.r(); ++i)
    s = checked_add(s, checked_mul(data.d[static_cast<std::size_t>(i)], ipow(data.p, j[i + 1]) - 1));
  return s;
}

BigInt torsion_index_bound(const JInvariant& j, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(j.sum()));
}

RationalCycleCounts rational_cycle_counts(const TorsionData& data, const JInvariant& j, const BigInt& flag_rank) {
  require_same_row(data, j);
  const BigInt p = data.p;
  using boost::multiprecision::pow;
  const int k_sum = data.k_sum();
  const BigInt pk = pow(p, static_cast<unsigned>(k_sum));
  if (flag_rank <= 0 || flag_rank % pk != 0)
    throw Error(ErrorCode::NonIntegralRank, "flag rank " + flag_rank.str() + " is not divisible by " + pk.str());
  RationalCycleCounts c;
  c.rk_r = flag_rank / pk;
  c.rank_a = pow(p, static_cast<unsigned>(k_sum - j.sum())) * c.rk_r;
  c.rank_b = pow(p, static_cast<unsigned>(2 * k_sum - j.sum())) * c.rk_r * c.rk_r;
  return c;
}

RationalCycleCounts rational_cycle_counts(const GroupForm& form, const JInvariant& j) {
  return rational_cycle_counts(torsion_data(form, j.data().p), j, weyl_group_order(form.base()));
}

bool is_m_positive(const Poly& g, std::int64_t m, const SummandTable& summands) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (g.is_zero()) return false;
  bool ok = true;
  for (auto q : prime_divisors(m)) {
    auto it = summands.find(static_cast<int>(q));
    if (it == summands.end()) throw Error(ErrorCode::MissingPrime, "no summand polynomial for p = " + std::to_string(q));
    if (!ok) continue;
    auto quot = divide_exact(g, it->second);
    ok = quot && quot->has_nonnegative_coefficients();
  }
  return ok;
}

std::map<int, int> cyclotomic_factorization(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no cyclotomic factorization");
  std::map<int, int> out;
  Poly rest = f;
  for (int n = 1; rest.degree() > 0; ++n) {
    if (cyclotomic_degree(n) > rest.degree()) {
      // φ(n) >= sqrt(n/2), so once n is large nothing can divide any more
      if (n > 2 * rest.degree() * rest.degree() + 2) break;
      continue;
    }
    const Poly phi = cyclotomic(n);
    while (auto q = divide_exact(rest, phi)) {
      rest = std::move(*q);
      ++out[n];
    }
  }
  if (!(rest == Poly::constant(1)))
    throw Error(ErrorCode::InvalidArgument, f.to_string() + " is not a product of cyclotomic polynomials");
  return out;
}

bool is_m_decomposable(const Poly& f, std::int64_t m, const SummandTable& summands, std::uint64_t budget) {
  if (f.is_zero() || !f.has_nonnegative_coefficients()) return false;
  // any m-positive g is a multiple of L = lcm of the summands
  std::map<int, int> lexp;
  for (auto q : prime_divisors(m)) {
    auto it = summands.find(static_cast<int>(q));
    if (it == summands.end()) throw Error(ErrorCode::MissingPrime, "no summand polynomial for p = " + std::to_string(q));
    for (auto [n, e] : cyclotomic_factorization(it->second)) lexp[n] = std::max(lexp[n], e);
  }
  const Poly lcm = from_factorization(lexp);
  const int dl = lcm.degree();
  const int df = f.degree();
  if (dl > df) return false;
  const int dh = df - dl;
  const auto& L = lcm.coeffs();
  std::vector<std::int64_t> h(static_cast<std::size_t>(dh) + 1, 0);
  std::uint64_t nodes = 0;

  // choose g_0..g_dh in [0, f_i]; L_0 = 1 fixes h_i from g_i
  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (++nodes > budget) throw Error(ErrorCode::SearchBudgetExceeded, "decomposability search exceeded budget");
    if (i > dh) {
      const Poly g = lcm * Poly(h);
      if (g.is_zero() || g == f) return false;
      const Poly rest = f - g;
      if (!g.has_nonnegative_coefficients() || !rest.has_nonnegative_coefficients()) return false;
      return is_m_positive(g, m, summands) && is_m_positive(rest, m, summands);
    }
    std::int64_t carry = 0;
    for (int s = 1; s <= std::min(i, dl); ++s) carry += L[static_cast<std::size_t>(s)] * h[static_cast<std::size_t>(i - s)];
    for (std::int64_t gi = 0; gi <= f[i]; ++gi) {
      h[static_cast<std::size_t>(i)] = gi - carry;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

IntegralDecomposition integral_decomposition(const Poly& total, std::int64_t m, const SummandTable& summands,
                                             std::uint64_t budget, bool all) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const auto texp = cyclotomic_factorization(total);
  std::map<int, int> lexp;
  for (auto q : prime_divisors(m)) {
    auto it = summands.find(static_cast<int>(q));
    if (it == summands.end()) throw Error(ErrorCode::MissingPrime, "no summand polynomial for p = " + std::to_string(q));
    for (auto [n, e] : cyclotomic_factorization(it->second)) lexp[n] = std::max(lexp[n], e);
  }
  for (auto [n, e] : lexp) {
    auto it = texp.find(n);
    if (it == texp.end() || it->second < e)
      throw Error(ErrorCode::NoDivisor, "the summand polynomials do not divide " + total.to_string());
  }

  // divisors of total that are multiples of L, as exponent vectors with degree
  struct Slot {
    int n, lo, hi, deg;
  };
  std::vector<Slot> slots;
  for (auto [n, e] : texp) {
    auto it = lexp.find(n);
    slots.push_back(Slot{n, it == lexp.end() ? 0 : it->second, e, cyclotomic_degree(n)});
  }
  std::vector<std::pair<int, std::vector<int>>> divisors;
  std::vector<int> cur(slots.size(), 0);
  std::function<void(std::size_t, int)> gen = [&](std::size_t i, int deg) {
    if (i == slots.size()) {
      if (divisors.size() >= budget) throw Error(ErrorCode::SearchBudgetExceeded, "too many divisors to enumerate");
      divisors.emplace_back(deg, cur);
      return;
    }
    for (int e = slots[i].lo; e <= slots[i].hi; ++e) {
      cur[i] = e;
      gen(i + 1, deg + e * slots[i].deg);
    }
  };
  gen(0, 0);
  std::stable_sort(divisors.begin(), divisors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Poly> best;
  int best_deg = -1;
  for (const auto& [deg, exps] : divisors) {
    if (best_deg >= 0 && deg > best_deg) break;
    std::map<int, int> fx;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (exps[i] > 0) fx[slots[i].n] = exps[i];
    Poly f = from_factorization(fx);
    if (!f.has_nonnegative_coefficients() || !is_m_positive(f, m, summands)) continue;
    auto cof = divide_exact(total, f);
    if (!cof || !cof->has_nonnegative_coefficients()) continue;
    if (is_m_decomposable(f, m, summands, budget)) continue;
    best_deg = deg;
    best.push_back(std::move(f));
  }
  if (best.empty()) throw Error(ErrorCode::NoDivisor, "no m-positive divisor of " + total.to_string());
  std::sort(best.begin(), best.end(), [](const Poly& a, const Poly& b) { return lex_less(b, a); });
  IntegralDecomposition out;
  out.divisor = best.front();
  out.multiplicities = divide_or_throw(total, out.divisor);
  if (all) out.candidates = std::move(best);
  return out;
}

}  // namespace jmotive
