#include "jmotive/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "jmotive/arith.hpp"
#include "jmotive/error.hpp"

namespace jmotive {

Poly::Poly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(std::int64_t c) { return Poly(std::vector<std::int64_t>{c}); }

Poly Poly::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::geometric(int n) { return geometric(n, 1); }

Poly Poly::geometric(int count, int step) {
  if (count < 0 || step < 1) throw Error(ErrorCode::InvalidArgument, "bad geometric series");
  if (count == 0) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>((count - 1) * step) + 1, 0);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i * step)] = 1;
  return Poly(std::move(v));
}

Poly Poly::ratio(int a, int b) {
  if (b <= 0 || a < 0 || a % b != 0) throw Error(ErrorCode::InvalidArgument, "ratio needs b | a");
  return geometric(a / b, b);
}

std::int64_t Poly::value_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

bool Poly::has_nonnegative_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Poly::is_palindromic() const noexcept {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    std::int64_t r;
    if (__builtin_sub_overflow(coeffs_[i], o.coeffs_[i], &r))
      throw Error(ErrorCode::Overflow, "64-bit subtraction overflow");
    coeffs_[i] = r;
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (dividend.is_zero()) return Poly{};
  const int n = dividend.degree();
  const int m = divisor.degree();
  if (n < m) return std::nullopt;
  const std::int64_t lead = divisor.coeffs().back();
  std::vector<std::int64_t> rem = dividend.coeffs();
  std::vector<std::int64_t> q(static_cast<std::size_t>(n - m) + 1, 0);
  // Synthetic division from the top; any leading remainder term that the
  // divisor's leading coefficient cannot absorb ends the attempt.
  for (int i = n - m; i >= 0; --i) {
    std::int64_t top = rem[static_cast<std::size_t>(i + m)];
    if (top % lead != 0) return std::nullopt;
    std::int64_t c = top / lead;
    q[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= m; ++j) {
      std::int64_t prod = checked_mul(c, divisor.coeffs()[static_cast<std::size_t>(j)]);
      std::int64_t& slot = rem[static_cast<std::size_t>(i + j)];
      if (__builtin_sub_overflow(slot, prod, &slot)) throw Error(ErrorCode::Overflow, "overflow in division");
    }
  }
  for (int j = 0; j < m; ++j)
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  return Poly(std::move(q));
}

Poly divide_or_throw(const Poly& dividend, const Poly& divisor) {
  auto q = divide_exact(dividend, divisor);
  if (!q)
    throw Error(ErrorCode::NotDivisible, "(" + dividend.to_string() + ") is not divisible by (" +
                                             divisor.to_string() + ")");
  return *q;
}

Poly cyclotomic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 = prod_{k | n} Phi_k
  Poly p = Poly::monomial(n) - Poly::constant(1);
  for (int k = 1; k < n; ++k)
    if (n % k == 0) p = divide_or_throw(p, cyclotomic(k));
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

bool lex_less(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace jmotive
