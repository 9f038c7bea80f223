#include "jmotive/arith.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "jmotive/error.hpp"

namespace jmotive {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnsupportedForm: return "UnsupportedForm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NonIntegralRank: return "NonIntegralRank";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NoDivisor: return "NoDivisor";
    case ErrorCode::NotAlmostIdempotent: return "NotAlmostIdempotent";
    case ErrorCode::NotAFamily: return "NotAFamily";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize expects a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [q, e] : factorize(n)) out.push_back(q);
  return out;
}

int p_adic_valuation(std::int64_t n, std::int64_t p) {
  if (n <= 0 || p < 2) throw Error(ErrorCode::InvalidArgument, "valuation needs n > 0, p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
  return r;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

int floor_log2_ratio(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw Error(ErrorCode::InvalidArgument, "floor_log2_ratio needs positive arguments");
  if (num < den) return -1;
  int k = 0;
  // largest k with den * 2^k <= num
  while (den <= num / 2) {
    den *= 2;
    ++k;
  }
  return k;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m) % m);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod_floor(a, m), y = 1;
  // extended Euclid on (m, a)
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) return 0;
  return mod_floor(x, m);
}

}  // namespace jmotive
